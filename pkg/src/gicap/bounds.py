"""Capacity outer bounds and exact capacity expressions.

Three bound families cover the class taxonomy:

* weak channels: a seven-constraint region combining point-to-point caps,
  the two one-sided (genie) sum bounds, a sharper interference-limited
  sum bound, and 2R1+R2 / R1+2R2 bounds;
* mixed channels: five constraints, replacing the failed one-sided bound
  with the multiple-access sum bound at the strongly-interfered receiver;
* strong channels: the exact capacity region (intersection of the two
  MAC regions), which serves as both inner and outer region.

The interference-limited sum bound (``new_sum_bound``) is

    R1 + R2 <= log(1 + INR1 + SNR1/(1+INR2)) + log(1 + INR2 + SNR2/(1+INR1)),

whose symmetric specialization log(1 + INR + SNR/(1+INR)) closes the
regime where one-sided bounds are arbitrarily loose.

``symmetric_bounds`` also evaluates the classical Kramer-style symmetric
rate bound

    log[2 - A + sqrt(A^2 + 4*SNR*A)] - 1,   A = 1 + SNR/INR,

which is only defined on the normalization 0 < INR < SNR and is reported
as undefined outside it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .channel import ChannelParams, InterferenceTag, classify
from .errors import ClassMismatchError, DomainError
from .region import RateConstraint, RateRegion

__all__ = [
    "SymmetricBoundSet",
    "kramer_bound",
    "mixed_outer",
    "new_sum_bound",
    "one_sided_sum_capacity",
    "pt2pt_outer",
    "strong_capacity",
    "symmetric_bounds",
    "symmetric_capacity_strong",
    "weak_outer",
]

_LOG2 = math.log2


def new_sum_bound(params: ChannelParams) -> float:
    """Interference-limited sum-rate upper bound, valid for any channel."""
    s1, s2, i1, i2 = params.snr1, params.snr2, params.inr1, params.inr2
    return _LOG2(1.0 + i1 + s1 / (1.0 + i2)) + _LOG2(1.0 + i2 + s2 / (1.0 + i1))


def one_sided_sum_capacity(snr1: float, snr2: float, inr2: float) -> float:
    """Sum capacity of the one-sided (Z) channel with weak interference.

    Valid only for INR2 < SNR1; the strong one-sided case is the MAC sum
    bound and is handled by the mixed outer bound instead.
    """
    if not (inr2 < snr1):
        raise DomainError(
            f"one-sided sum capacity needs inr2 < snr1, got inr2={inr2!r}, snr1={snr1!r}"
        )
    return _LOG2(1.0 + snr1) + _LOG2(1.0 + snr2 / (1.0 + inr2))


def weak_outer(params: ChannelParams) -> RateRegion:
    """Seven-constraint outer bound for weak interference channels.

    Constraint order (two singles, three sums, 2R1+R2, R1+2R2) is part of
    the contract; gap audits pair it positionally with the achievable
    region's constraints.
    """
    if classify(params).tag is not InterferenceTag.WEAK:
        raise ClassMismatchError(f"weak_outer needs a weak channel, got {params}")
    s1, s2, i1, i2 = params.snr1, params.snr2, params.inr1, params.inr2
    return RateRegion(
        [
            RateConstraint(1.0, 0.0, _LOG2(1.0 + s1)),
            RateConstraint(0.0, 1.0, _LOG2(1.0 + s2)),
            RateConstraint(1.0, 1.0, _LOG2(1.0 + s1) + _LOG2(1.0 + s2 / (1.0 + i2))),
            RateConstraint(1.0, 1.0, _LOG2(1.0 + s2) + _LOG2(1.0 + s1 / (1.0 + i1))),
            RateConstraint(1.0, 1.0, new_sum_bound(params)),
            RateConstraint(
                2.0,
                1.0,
                _LOG2(1.0 + s1 + i1)
                + _LOG2(1.0 + i2 + s2 / (1.0 + i1))
                + _LOG2((1.0 + s1) / (1.0 + i2)),
            ),
            RateConstraint(
                1.0,
                2.0,
                _LOG2(1.0 + s2 + i2)
                + _LOG2(1.0 + i1 + s1 / (1.0 + i2))
                + _LOG2((1.0 + s2) / (1.0 + i1)),
            ),
        ]
    )


def mixed_outer(params: ChannelParams) -> RateRegion:
    """Five-constraint outer bound for mixed interference channels.

    Stated for the orientation INR1 >= SNR2, INR2 < SNR1 (strong at
    receiver 1); the opposite orientation is the user-swapped image, with
    the weighted constraint becoming 2R1+R2.  Redundant constraints (the
    interference-limited sum bound and one weighted bound) are excluded.
    """
    tag = classify(params).tag
    if tag is InterferenceTag.MIXED_STRONG_AT_2:
        swapped = mixed_outer(params.swapped())
        return RateRegion(
            [RateConstraint(c.c2, c.c1, c.rhs) for c in swapped.constraints]
        )
    if tag is not InterferenceTag.MIXED_STRONG_AT_1:
        raise ClassMismatchError(f"mixed_outer needs a mixed channel, got {params}")
    s1, s2, i1, i2 = params.snr1, params.snr2, params.inr1, params.inr2
    return RateRegion(
        [
            RateConstraint(1.0, 0.0, _LOG2(1.0 + s1)),
            RateConstraint(0.0, 1.0, _LOG2(1.0 + s2)),
            RateConstraint(1.0, 1.0, _LOG2(1.0 + s1) + _LOG2(1.0 + s2 / (1.0 + i2))),
            RateConstraint(1.0, 1.0, _LOG2(1.0 + s1 + i1)),
            RateConstraint(
                1.0,
                2.0,
                _LOG2(1.0 + s2 + i2)
                + _LOG2(1.0 + i1 + s1 / (1.0 + i2))
                + _LOG2(1.0 + s2 / (1.0 + i1)),
            ),
        ]
    )


def strong_capacity(params: ChannelParams) -> RateRegion:
    """Exact capacity of a strong channel: intersection of the two MACs."""
    if classify(params).tag is not InterferenceTag.STRONG:
        raise ClassMismatchError(f"strong_capacity needs a strong channel, got {params}")
    s1, s2, i1, i2 = params.snr1, params.snr2, params.inr1, params.inr2
    return RateRegion(
        [
            RateConstraint(1.0, 0.0, _LOG2(1.0 + s1)),
            RateConstraint(0.0, 1.0, _LOG2(1.0 + s2)),
            RateConstraint(1.0, 1.0, _LOG2(1.0 + s1 + i1)),
            RateConstraint(1.0, 1.0, _LOG2(1.0 + s2 + i2)),
        ]
    )


def pt2pt_outer(params: ChannelParams) -> RateRegion:
    """Interference-free point-to-point box: R_i <= log(1 + SNR_i)."""
    return RateRegion(
        [
            RateConstraint(1.0, 0.0, _LOG2(1.0 + params.snr1)),
            RateConstraint(0.0, 1.0, _LOG2(1.0 + params.snr2)),
        ]
    )


def symmetric_capacity_strong(snr: float, inr: float) -> float:
    """Exact symmetric capacity for INR >= SNR.

    log(1+SNR) in the very strong case (INR >= SNR^2 + SNR, interference
    decodable up front at no cost), else 1/2 log(1+SNR+INR).
    """
    if inr < snr:
        raise ClassMismatchError(
            f"strong symmetric capacity needs inr >= snr, got inr={inr!r}, snr={snr!r}"
        )
    if inr >= snr * snr + snr:
        return _LOG2(1.0 + snr)
    return 0.5 * _LOG2(1.0 + snr + inr)


def kramer_bound(snr: float, inr: float) -> float:
    """Kramer-style symmetric rate bound; needs 0 < INR < SNR."""
    if not (0.0 < inr < snr):
        raise DomainError(
            f"kramer bound needs 0 < inr < snr, got inr={inr!r}, snr={snr!r}"
        )
    a = 1.0 + snr / inr
    return _LOG2(2.0 - a + math.sqrt(a * a + 4.0 * snr * a)) - 1.0


@dataclass(frozen=True)
class SymmetricBoundSet:
    """Symmetric-rate upper bounds; ``kramer_ub`` is None outside 0 < INR < SNR."""

    genie_ub: float
    new_ub: float
    kramer_ub: float | None
    best: float


def symmetric_bounds(snr: float, inr: float) -> SymmetricBoundSet:
    """All applicable symmetric-rate upper bounds and their minimum.

    genie_ub = 1/2 log(1+SNR) + 1/2 log(1+SNR/(1+INR)) comes from the
    one-sided genie; new_ub = log(1+INR+SNR/(1+INR)) is the symmetric
    interference-limited bound.  For INR < 1 the point-to-point cap
    log(1+SNR) is folded into ``best`` as well.
    """
    if not (snr > 0.0) or inr < 0.0:
        raise DomainError(f"symmetric_bounds needs snr > 0, inr >= 0, got {snr!r}, {inr!r}")
    genie = 0.5 * _LOG2(1.0 + snr) + 0.5 * _LOG2(1.0 + snr / (1.0 + inr))
    new_ub = _LOG2(1.0 + inr + snr / (1.0 + inr))
    kramer: float | None = kramer_bound(snr, inr) if 0.0 < inr < snr else None
    candidates = [genie, new_ub]
    if kramer is not None:
        candidates.append(kramer)
    if inr < 1.0:
        candidates.append(_LOG2(1.0 + snr))
    return SymmetricBoundSet(
        genie_ub=genie, new_ub=new_ub, kramer_ub=kramer, best=min(candidates)
    )
