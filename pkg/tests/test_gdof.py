import math

import pytest

from gicap import (
    BaselineScheme,
    ChannelParams,
    ClassMismatchError,
    DomainError,
    GdofParams,
    InterferenceTag,
    baseline_gdof,
    d_sym,
    finite_snr_convergence,
    first_order_expansion,
    mixed_gdof_region,
    one_sided_gdof_region,
    strong_gdof_region,
    symmetric_gdof_region,
    symmetric_hk_rate,
    symmetric_rate,
    vertices,
    weak_gdof_region,
)
from conftest import random_channel, vertex_sets_equal

log2 = math.log2


class TestDsym:
    @pytest.mark.parametrize(
        "a,expect",
        [
            (0.0, 1.0),
            (0.25, 0.75),
            (0.5, 0.5),
            (0.55, 0.55),
            (0.75, 0.625),
            (1.0, 0.5),
            (1.5, 0.75),
            (2.0, 1.0),
            (2.5, 1.0),
        ],
    )
    def test_values(self, a, expect):
        assert d_sym(a) == pytest.approx(expect, abs=1e-15)

    def test_breakpoints_exact(self):
        assert d_sym(0.5) == 0.5
        assert d_sym(2 / 3) == 2 / 3
        assert d_sym(1.0) == 0.5
        assert d_sym(2.0) == 1.0

    def test_continuity_and_bound(self):
        grid = [i / 1000 for i in range(3001)]
        values = [d_sym(a) for a in grid]
        assert all(v <= 1.0 + 1e-15 for v in values)
        assert all(
            abs(b - a) <= 1.1e-3 for a, b in zip(values, values[1:])
        )  # Lipschitz constant 1

    def test_negative_rejected(self):
        with pytest.raises(DomainError):
            d_sym(-0.01)


class TestGdofParams:
    def test_validation(self):
        with pytest.raises(DomainError):
            GdofParams(0.0, 0.5, 0.5)
        with pytest.raises(DomainError):
            GdofParams(1.0, -0.5, 0.5)


class TestWeakGdofRegion:
    def test_symmetric_point_04(self):
        r = weak_gdof_region(GdofParams(1.0, 0.4, 0.4))
        sums = [c.rhs for c in r.constraints if (c.c1, c.c2) == (1.0, 1.0)]
        assert min(sums) == pytest.approx(1.2, abs=1e-12)
        assert sorted(sums) == pytest.approx([1.2, 1.6, 1.6], abs=1e-12)
        assert symmetric_rate(r) == pytest.approx(d_sym(0.4), abs=1e-12)

    def test_no_interference_unit_box(self):
        r = weak_gdof_region(GdofParams(1.0, 0.0, 0.0))
        vs = vertices(r)
        assert [(v.r1, v.r2) for v in vs] == [(0.0, 1.0), (1.0, 1.0), (1.0, 0.0)]
        assert vertex_sets_equal(vs, vertices(symmetric_gdof_region(0.0)))

    def test_symmetric_point_075(self):
        r = weak_gdof_region(GdofParams(1.0, 0.75, 0.75))
        triple = [c.rhs for c in r.constraints if (c.c1, c.c2) == (2.0, 1.0)]
        assert triple[0] == pytest.approx(2.0, abs=1e-12)
        assert symmetric_rate(r) == pytest.approx(0.625, abs=1e-12)

    def test_class_mismatch(self):
        with pytest.raises(ClassMismatchError):
            weak_gdof_region(GdofParams(1.0, 1.2, 0.4))
        with pytest.raises(ClassMismatchError):
            weak_gdof_region(GdofParams(1.0, 0.4, 1.2))

    def test_inside_unit_box(self, rng):
        for _ in range(50):
            a1 = rng.uniform(0.2, 2.0)
            g = GdofParams(a1, rng.uniform(0, a1 * 0.99), rng.uniform(0, 0.99))
            for v in vertices(weak_gdof_region(g)):
                assert -1e-12 <= v.r1 <= 1 + 1e-12
                assert -1e-12 <= v.r2 <= 1 + 1e-12


class TestMixedStrongGdofRegions:
    def test_mixed_example(self):
        r = mixed_gdof_region(GdofParams(1.0, 1.5, 0.5))
        sums = [c.rhs for c in r.constraints if (c.c1, c.c2) == (1.0, 1.0)]
        assert sorted(sums) == pytest.approx([1.5, 1.5], abs=1e-12)
        weighted = [c.rhs for c in r.constraints if (c.c1, c.c2) == (1.0, 2.0)]
        assert weighted[0] == pytest.approx(2.5, abs=1e-12)

    def test_strong_matches_symmetric_form(self):
        for a in (1.0, 1.3, 1.9):
            g = GdofParams(1.0, a, a)
            got = vertices(strong_gdof_region(g))
            ref = vertices(symmetric_gdof_region(a))
            assert vertex_sets_equal(got, ref)

    def test_very_strong_unit_box(self):
        r = strong_gdof_region(GdofParams(1.0, 2.0, 2.0))
        assert [(v.r1, v.r2) for v in vertices(r)] == [
            (0.0, 1.0),
            (1.0, 1.0),
            (1.0, 0.0),
        ]

    def test_class_mismatch(self):
        with pytest.raises(ClassMismatchError):
            mixed_gdof_region(GdofParams(1.0, 0.5, 0.5))
        with pytest.raises(ClassMismatchError):
            strong_gdof_region(GdofParams(1.0, 1.5, 0.5))


class TestSymmetricGdofRegion:
    def test_half(self):
        r = symmetric_gdof_region(0.5)
        sums = [c.rhs for c in r.constraints if (c.c1, c.c2) == (1.0, 1.0)]
        assert sums[0] == pytest.approx(1.0, abs=1e-15)

    def test_branch_agreement_at_one(self):
        below = symmetric_gdof_region(1.0 - 1e-12)
        at = symmetric_gdof_region(1.0)
        assert vertex_sets_equal(vertices(below), vertices(at), tol=1e-9)

    def test_point_six(self):
        r = symmetric_gdof_region(0.6)
        sums = [c.rhs for c in r.constraints if (c.c1, c.c2) == (1.0, 1.0)]
        assert sums[0] == pytest.approx(1.2, abs=1e-15)
        triple = [c.rhs for c in r.constraints if (c.c1, c.c2) == (2.0, 1.0)]
        assert triple[0] == pytest.approx(2.0, abs=1e-15)

    def test_symmetric_point_equals_d_sym_on_grid(self):
        for i in range(0, 251):
            a = i / 100
            point = symmetric_rate(symmetric_gdof_region(a))
            assert abs(point - d_sym(a)) <= 1e-12, f"alpha={a}"

    def test_matches_general_weak_rows(self, rng):
        # the merged min-form and the seven-row weak construction describe
        # the same polygon on equal slopes
        for _ in range(80):
            a = rng.uniform(0.0, 0.999)
            assert vertex_sets_equal(
                vertices(symmetric_gdof_region(a)),
                vertices(weak_gdof_region(GdofParams(1.0, a, a))),
            )


class TestOneSidedGdofRegion:
    def test_weak_corners(self):
        r = one_sided_gdof_region(GdofParams(1.0, 0.0, 0.4), strong=False)
        vs = vertices(r)
        assert any(
            abs(v.r1 - 1.0) < 1e-12 and abs(v.r2 - 0.6) < 1e-12 for v in vs
        )
        assert any(
            abs(v.r1 - 0.6) < 1e-12 and abs(v.r2 - 1.0) < 1e-12 for v in vs
        )

    def test_weak_dominant_cross(self):
        r = one_sided_gdof_region(GdofParams(0.5, 0.0, 0.8), strong=False)
        sum_c = [c for c in r.constraints if c.c1 == 1.0 and c.c2 == 0.5]
        assert sum_c[0].rhs == pytest.approx(1.0, abs=1e-15)
        assert any(
            abs(v.r1 - 0.5) < 1e-12 and abs(v.r2 - 1.0) < 1e-12 for v in vertices(r)
        )

    def test_strong(self):
        r = one_sided_gdof_region(GdofParams(1.0, 0.0, 1.5), strong=True)
        sums = [c.rhs for c in r.constraints if (c.c1, c.c2) == (1.0, 1.0)]
        assert sums[0] == pytest.approx(1.5, abs=1e-15)

    def test_validation(self):
        with pytest.raises(ClassMismatchError):
            one_sided_gdof_region(GdofParams(1.0, 0.3, 0.4), strong=False)
        with pytest.raises(ClassMismatchError):
            one_sided_gdof_region(GdofParams(1.0, 0.0, 1.5), strong=False)
        with pytest.raises(ClassMismatchError):
            one_sided_gdof_region(GdofParams(1.0, 0.0, 0.5), strong=True)

    def test_weak_case_matches_general_weak_region(self, rng):
        # with one cross link absent the compact three-constraint form
        # describes the same polygon as the seven-constraint weak region
        for _ in range(60):
            g = GdofParams(rng.uniform(0.2, 2.0), 0.0, rng.uniform(0.0, 0.999))
            assert vertex_sets_equal(
                vertices(one_sided_gdof_region(g, strong=False)),
                vertices(weak_gdof_region(g)),
            )


class TestBaselines:
    @pytest.mark.parametrize(
        "a,scheme,expect",
        [
            (0.5, BaselineScheme.ORTHOGONALIZE, 0.5),
            (0.3, BaselineScheme.TREAT_AS_NOISE, 0.7),
            (1.5, BaselineScheme.TREAT_AS_NOISE, 0.0),
            (2.2, "orthogonalize", 0.5),
        ],
    )
    def test_values(self, a, scheme, expect):
        assert baseline_gdof(a, scheme) == pytest.approx(expect, abs=1e-15)

    def test_never_beats_capacity_curve(self):
        for i in range(0, 251):
            a = i / 100
            d = d_sym(a)
            orth = baseline_gdof(a, BaselineScheme.ORTHOGONALIZE)
            tin = baseline_gdof(a, BaselineScheme.TREAT_AS_NOISE)
            assert orth <= d + 1e-12
            assert tin <= d + 1e-12
            if a in (0.5, 1.0):
                assert orth == pytest.approx(d, abs=1e-15)
            elif 0 < a:
                assert not math.isclose(orth, d) or a in (0.5, 1.0)
            if a <= 0.5:
                assert tin == pytest.approx(d, abs=1e-15)
            elif a < 2.0:
                assert tin < d


class TestFiniteSnrConvergence:
    def test_weak_anchor(self):
        res = finite_snr_convergence(100.0, 0.5)
        assert res.lower == pytest.approx(
            symmetric_hk_rate(100, 10) / log2(100), abs=1e-12
        )
        assert res.lower == pytest.approx(0.51058, abs=1e-4)
        assert res.d_limit == 0.5

    def test_high_snr_sandwich(self):
        res = finite_snr_convergence(1e12, 0.75)
        slack = 2.0 / log2(1e12)
        assert abs(res.lower - 0.625) <= slack
        assert abs(res.upper - 0.625) <= slack
        assert res.lower <= res.upper + 1e-12

    def test_strong_slope_is_exact(self):
        res = finite_snr_convergence(1e6, 1.5)
        assert res.lower == res.upper

    def test_zero_slope_trends_to_one(self):
        vals = [finite_snr_convergence(s, 0.0) for s in (1e3, 1e6, 1e9)]
        lowers = [v.lower for v in vals]
        assert all(a < b for a, b in zip(lowers, lowers[1:]))
        assert abs(vals[-1].lower - 1.0) < 0.05
        assert abs(vals[-1].upper - 1.0) < 0.05

    def test_sandwich_width_bound(self):
        # upper - lower stays below 2/log2(snr) over the whole slope grid
        # at snr >= 1e6 (no exclusions turned out to be necessary)
        for snr in (1e6, 1e9):
            budget = 2.0 / log2(snr)
            for i in range(0, 51):
                r = finite_snr_convergence(snr, i / 20)
                assert r.upper - r.lower <= budget

    def test_validation(self):
        with pytest.raises(DomainError):
            finite_snr_convergence(2.0, 0.5)
        with pytest.raises(DomainError):
            finite_snr_convergence(100.0, -0.1)


class TestFirstOrderExpansion:
    def test_weak_interference_limited_row(self):
        r = first_order_expansion(ChannelParams(100, 100, 10, 10))
        sums = [c.rhs for c in r.constraints if (c.c1, c.c2) == (1.0, 1.0)]
        # interference-limited row: max(log 10, log 10) + max(log 10, log 10)
        assert min(sums) == pytest.approx(2 * log2(10), abs=1e-12)
        assert min(sums) == pytest.approx(6.6439, abs=1e-4)

    def test_weak_unit_cross_box_dominates(self):
        r = first_order_expansion(ChannelParams(100, 200, 1, 1))
        vs = vertices(r)
        assert vs[0].r2 == pytest.approx(log2(200), abs=1e-9)
        assert vs[-1].r1 == pytest.approx(log2(100), abs=1e-9)
        assert len(vs) == 3  # box behavior

    def test_mixed_mac_row(self):
        r = first_order_expansion(ChannelParams(100, 10, 20, 5))
        sums = [c.rhs for c in r.constraints if (c.c1, c.c2) == (1.0, 1.0)]
        assert min(sums) == pytest.approx(max(log2(100), log2(20)), abs=1e-12)
        assert min(sums) == pytest.approx(6.6439, abs=1e-4)

    def test_mixed_at_2_is_mirror(self):
        a = first_order_expansion(ChannelParams(100, 10, 20, 5))
        b = first_order_expansion(ChannelParams(10, 100, 5, 20))
        assert [(c.c2, c.c1, c.rhs) for c in b.constraints] == [
            (c.c1, c.c2, c.rhs) for c in a.constraints
        ]

    def test_zero_cross_ratio_degenerates_to_box(self):
        r = first_order_expansion(ChannelParams(100, 200, 0, 0))
        assert len(r.constraints) == 2

    def test_scaled_gdof_region_matches(self, rng):
        for _ in range(40):
            p = random_channel(rng, InterferenceTag.WEAK)
            if min(p.snr1, p.snr2) <= 1.0 or min(p.inr1, p.inr2) < 1.0:
                continue
            scale = log2(p.snr1)
            a1 = log2(p.snr2) / scale
            a2 = log2(p.inr1) / scale
            a3 = log2(p.inr2) / scale
            if not (0.0 <= a2 < a1 and 0.0 <= a3 < 1.0):
                continue
            g = GdofParams(a1, a2, a3)
            expansion = first_order_expansion(p)
            gregion = weak_gdof_region(g)
            assert len(expansion.constraints) == len(gregion.constraints)
            for ce, cg in zip(expansion.constraints, gregion.constraints):
                if cg.c1 == 0.0:
                    assert ce.rhs == pytest.approx(
                        cg.rhs * g.alpha1 * scale, abs=1e-9
                    )
                else:
                    assert ce.rhs == pytest.approx(cg.rhs * scale, abs=1e-9)

    def test_validation(self):
        with pytest.raises(ClassMismatchError):
            first_order_expansion(ChannelParams(10, 10, 100, 100))
        with pytest.raises(DomainError):
            first_order_expansion(ChannelParams(0.5, 10, 0.1, 0.1))
