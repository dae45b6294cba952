"""Command-line front end: compute, certify, sweep, emit figure data.

Subcommands
-----------
classify    interference class, regime, B-set, and alpha for a channel
region      achievable + outer regions with vertex lists and certificates
symrate     symmetric achievable rate and all symmetric upper bounds
gap-audit   per-family delta audit of a single channel
sweep       randomized one-bit / within-half verification sweep (CSV + JSON)
gdof        generalized-degrees-of-freedom regions and the d_sym value
figures     figure-ready CSV data (curves and region polygons)
diffrate    differential rate densities at one power level

Channel ratios are given with --snr1/--snr2/--inr1/--inr2 (or --snr/--inr
for symmetric commands), linear by default, in dB with --db.  All emitted
numbers carry 12 significant digits; outputs are byte-identical across
runs for fixed flags and seed.

Exit codes: 0 success, 1 runtime/I-O failure, 2 usage or validation
error, 3 certification failure (a sweep found a guarantee violation,
which would indicate a formula bug).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import bounds as _bounds
from . import gap as _gap
from . import gdof as _gdof
from . import hk as _hk
from .channel import (
    ChannelParams,
    InterferenceTag,
    alpha as _alpha,
    classify,
    db_to_linear,
    symmetric_regime,
)
from .errors import GicapError
from .region import (
    RateRegion,
    one_bit_certificate,
    region_to_jsonable,
    sigfig,
    symmetric_rate,
    vertices,
    within_half_certificate,
)

__all__ = ["main", "entrypoint"]

_FIGURE_IDS = ("gdof-curve", "hk-fraction", "ub-vs-hk", "diff-rates", "gdof-region")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gicap",
        description="Two-user Gaussian interference channel calculator and verifier.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--db", action="store_true", help="interpret ratios as dB")
    common.add_argument("--seed", type=int, default=0, help="sweep RNG seed")
    common.add_argument("--out", type=str, default=None, help="output file path")
    common.add_argument(
        "--format",
        choices=("json", "csv"),
        default=None,
        help="output format (default: json; figure data defaults to csv)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def channel_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--snr1", type=float, required=True)
        p.add_argument("--snr2", type=float, required=True)
        p.add_argument("--inr1", type=float, required=True)
        p.add_argument("--inr2", type=float, required=True)

    p = sub.add_parser("classify", parents=[common], help="classify a channel")
    channel_args(p)

    p = sub.add_parser(
        "region", parents=[common], help="achievable and outer regions + certificates"
    )
    channel_args(p)
    p.add_argument(
        "--split",
        choices=("recommended", "explicit"),
        default="recommended",
        help="power split selection",
    )
    p.add_argument("--inr-p2", type=float, default=None, help="explicit split: inr_p2")
    p.add_argument("--inr-p1", type=float, default=None, help="explicit split: inr_p1")
    p.add_argument(
        "--bound",
        choices=("auto", "pt2pt"),
        default="auto",
        help="outer bound: class-matched or the point-to-point box",
    )

    p = sub.add_parser("symrate", parents=[common], help="symmetric rate and bounds")
    p.add_argument("--snr", type=float, required=True)
    p.add_argument("--inr", type=float, required=True)

    p = sub.add_parser("gap-audit", parents=[common], help="single-channel delta audit")
    channel_args(p)

    p = sub.add_parser("sweep", parents=[common], help="randomized verification sweep")
    p.add_argument("--n", type=int, required=True, help="number of channels")
    p.add_argument(
        "--class",
        dest="class_filter",
        choices=("weak", "mixed", "any"),
        default="any",
        help="interference class filter",
    )
    p.add_argument(
        "--check",
        choices=("one-bit", "within-half"),
        default="one-bit",
        help="which guarantee the failure count tracks",
    )

    p = sub.add_parser("gdof", parents=[common], help="degrees-of-freedom regions")
    p.add_argument("--alpha", type=float, default=None, help="symmetric level")
    p.add_argument("--alpha1", type=float, default=None)
    p.add_argument("--alpha2", type=float, default=None)
    p.add_argument("--alpha3", type=float, default=None)

    p = sub.add_parser("figures", parents=[common], help="emit figure-ready CSV data")
    p.add_argument("figure_id", choices=_FIGURE_IDS)
    p.add_argument("--alpha", type=float, default=None, help="gdof-region level")

    p = sub.add_parser("diffrate", parents=[common], help="differential rate densities")
    p.add_argument("--snr1", type=float, required=True)
    p.add_argument("--inr2", type=float, required=True)
    p.add_argument("--z", type=float, required=True, help="normalized power level")
    return parser


def _ratio(value: float, db: bool) -> float:
    return db_to_linear(value) if db else value


def _channel_from_args(args) -> ChannelParams:
    return ChannelParams(
        snr1=_ratio(args.snr1, args.db),
        snr2=_ratio(args.snr2, args.db),
        inr1=_ratio(args.inr1, args.db),
        inr2=_ratio(args.inr2, args.db),
    )


def _round_floats(obj):
    if isinstance(obj, float):
        return sigfig(obj)
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _flatten(v, f"{prefix}{k}.")
    elif isinstance(obj, (list, tuple)):
        for i, v in enumerate(obj):
            yield from _flatten(v, f"{prefix}{i}.")
    else:
        yield prefix[:-1], obj


def _scalar_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def _emit_object(obj, args, stream) -> None:
    """Emit a result object as JSON, or as key,value CSV with dotted paths."""
    if (args.format or "json") == "csv":
        stream.write("key,value\n")
        for path, value in _flatten(obj):
            stream.write(f"{path},{_scalar_cell(value)}\n")
        return
    json.dump(_round_floats(obj), stream, indent=2)
    stream.write("\n")


def _emit_csv(header, rows, stream) -> None:
    stream.write(",".join(header) + "\n")
    for row in rows:
        stream.write(
            ",".join(f"{v:.12g}" if isinstance(v, float) else str(v) for v in row)
            + "\n"
        )


def _write_text(path: str | None, text_producer, stdout) -> None:
    if path is None:
        text_producer(stdout)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        text_producer(fh)


def _cmd_classify(args, stdout) -> int:
    params = _channel_from_args(args)
    cls = classify(params)
    out: dict = {"class": cls.tag.value, "very_strong": cls.very_strong}
    if params.is_symmetric:
        snr, inr = params.snr1, params.inr1
        if snr > 1.0 and inr > 0.0:
            out["alpha"] = _alpha(snr, inr)
        if snr > 1.0:
            reg = symmetric_regime(snr, inr)
            out["regime"] = reg.regime
            if reg.bset is not None:
                out["bset"] = reg.bset
    _emit_object(out, args, stdout)
    return 0


def _outer_for(params: ChannelParams, mode: str) -> RateRegion:
    if mode == "pt2pt":
        return _bounds.pt2pt_outer(params)
    tag = classify(params).tag
    if tag is InterferenceTag.WEAK:
        return _bounds.weak_outer(params)
    if tag is InterferenceTag.STRONG:
        return _bounds.strong_capacity(params)
    return _bounds.mixed_outer(params)


def _cmd_region(args, stdout) -> int:
    params = _channel_from_args(args)
    if args.split == "explicit":
        if args.inr_p2 is None or args.inr_p1 is None:
            raise GicapError("explicit split needs --inr-p2 and --inr-p1")
        split = _hk.PowerSplit(
            _ratio(args.inr_p2, args.db), _ratio(args.inr_p1, args.db)
        )
    else:
        split = _hk.recommended_split(params)
    inner = _hk.hk_region(params, split)
    outer = _outer_for(params, args.bound)
    out = {
        "class": classify(params).tag.value,
        "split": {"inr_p2": split.inr_p2, "inr_p1": split.inr_p1},
        "inner": region_to_jsonable(inner),
        "outer": region_to_jsonable(outer),
        "one_bit": one_bit_certificate(inner, outer),
        "within_half": within_half_certificate(inner, outer),
    }
    _emit_object(out, args, stdout)
    return 0


def _cmd_symrate(args, stdout) -> int:
    snr = _ratio(args.snr, args.db)
    inr = _ratio(args.inr, args.db)
    out: dict = {"snr": snr, "inr": inr}
    if inr >= snr:
        out["capacity"] = _bounds.symmetric_capacity_strong(snr, inr)
        out["hk_rate"] = symmetric_rate(
            _hk.hk_region(ChannelParams(snr, snr, inr, inr), _hk.PowerSplit(0.0, 0.0))
        )
    else:
        out["hk_rate"] = _hk.symmetric_hk_rate(snr, inr)
        sb = _bounds.symmetric_bounds(snr, inr)
        out["genie_ub"] = sb.genie_ub
        out["new_ub"] = sb.new_ub
        out["kramer_ub"] = sb.kramer_ub
        out["best_ub"] = sb.best
        out["gap_to_best"] = sb.best - out["hk_rate"]
    if snr > 1.0:
        reg = symmetric_regime(snr, inr)
        out["regime"] = reg.regime
        out["bset"] = reg.bset
    _emit_object(out, args, stdout)
    return 0


def _cmd_gap_audit(args, stdout) -> int:
    params = _channel_from_args(args)
    rep = _gap.delta_audit(params)
    inner, outer = _gap.audit_regions(params)
    out = {
        "class": rep.tag.value,
        "deltas": {
            "r1": rep.delta_r1,
            "r2": rep.delta_r2,
            "sum": rep.delta_sum,
            "2r1_r2": rep.delta_2r1_r2,
            "r1_2r2": rep.delta_r1_2r2,
        },
        "paired_deltas": {k: list(v) for k, v in rep.paired_deltas.items()},
        "delta_pass": rep.passed,
        "one_bit": one_bit_certificate(inner, outer),
        "within_half": within_half_certificate(inner, outer),
    }
    _emit_object(out, args, stdout)
    return 0


def _cmd_sweep(args, stdout) -> int:
    if args.n < 1:
        raise GicapError(f"--n must be >= 1, got {args.n}")
    if args.out is None:
        raise GicapError("sweep needs --out for the per-instance CSV")
    if args.check == "one-bit":
        result = _gap.one_bit_sweep(args.n, args.seed, args.class_filter)
    else:
        if args.class_filter != "any":
            raise GicapError("--check within-half sweeps weak and mixed jointly")
        result = _gap.within_half_sweep(args.n, args.seed)
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        _gap.write_sweep_csv(result, fh)
    _emit_object(_gap.sweep_summary(result), args, stdout)
    return 3 if result.failures else 0


def _gdof_region_for(args) -> tuple[dict, RateRegion]:
    if args.alpha is not None:
        region = _gdof.symmetric_gdof_region(args.alpha)
        meta = {"alpha": args.alpha, "d_sym": _gdof.d_sym(args.alpha)}
        return meta, region
    triple = (args.alpha1, args.alpha2, args.alpha3)
    if any(v is None for v in triple):
        raise GicapError("gdof needs --alpha or all of --alpha1/--alpha2/--alpha3")
    g = _gdof.GdofParams(*triple)
    if g.alpha2 == 0.0:
        # one cross link absent: emit the compact one-sided region (for
        # alpha3 < 1 its polygon coincides with the general weak one)
        strong_side = g.alpha3 >= 1.0
        region = _gdof.one_sided_gdof_region(g, strong=strong_side)
        kind = "one_sided_strong" if strong_side else "one_sided_weak"
    elif g.alpha2 < g.alpha1 and g.alpha3 < 1.0:
        region, kind = _gdof.weak_gdof_region(g), "weak"
    elif g.alpha2 >= g.alpha1 and g.alpha3 < 1.0:
        region, kind = _gdof.mixed_gdof_region(g), "mixed"
    elif g.alpha2 >= g.alpha1 and g.alpha3 >= 1.0:
        region, kind = _gdof.strong_gdof_region(g), "strong"
    else:
        raise GicapError(
            "slopes fall in the swapped-mixed orientation; swap the users and retry"
        )
    meta = {
        "alpha1": g.alpha1,
        "alpha2": g.alpha2,
        "alpha3": g.alpha3,
        "class": kind,
    }
    return meta, region


def _cmd_gdof(args, stdout) -> int:
    meta, region = _gdof_region_for(args)
    out = dict(meta)
    out["region"] = region_to_jsonable(region)
    out["symmetric_point"] = symmetric_rate(region)
    _emit_object(out, args, stdout)
    return 0


def _grid(count: int, step_denominator: int = 100):
    # i/100 keeps two-decimal grid points (0.5, 1.0, 2.0) exact.
    return [i / step_denominator for i in range(count + 1)]


def _figure_rows(figure_id: str, alpha_arg: float | None):
    if figure_id == "gdof-curve":
        header = ("alpha", "d_sym", "d_orth", "d_tin")
        rows = [
            (
                a,
                _gdof.d_sym(a),
                _gdof.baseline_gdof(a, _gdof.BaselineScheme.ORTHOGONALIZE),
                _gdof.baseline_gdof(a, _gdof.BaselineScheme.TREAT_AS_NOISE),
            )
            for a in _grid(250)
        ]
        return header, rows
    if figure_id == "hk-fraction":
        header = ("alpha", "hk_fraction")
        rows = [
            (a, min(1.0 - a / 2.0, max(a, 1.0 - a)))
            for a in _grid(100)
        ]
        return header, rows
    if figure_id == "ub-vs-hk":
        header = ("alpha", "hk_fraction", "ub_fraction")
        rows = [
            (a, min(1.0 - a / 2.0, max(a, 1.0 - a)), 1.0 - a / 2.0)
            for a in _grid(100)
        ]
        return header, rows
    if figure_id == "diff-rates":
        snr1, inr2 = db_to_linear(20.0), db_to_linear(10.0)
        header = ("z", "r1", "r2")
        rows = []
        for z in _grid(100):
            d = _hk.differential_rates(z, snr1, inr2)
            rows.append((z, d.r1, d.r2))
        return header, rows
    if figure_id == "gdof-region":
        if alpha_arg is None:
            raise GicapError("figure gdof-region needs --alpha")
        region = _gdof.symmetric_gdof_region(alpha_arg)
        header = ("d1", "d2")
        rows = [(v.r1, v.r2) for v in vertices(region)]
        return header, rows
    raise GicapError(f"unknown figure id {figure_id!r}")


def _cmd_figures(args, stdout) -> int:
    header, rows = _figure_rows(args.figure_id, args.alpha)
    if (args.format or "csv") == "json":
        payload = {"columns": list(header), "rows": [list(r) for r in rows]}
        _write_text(
            args.out,
            lambda fh: (json.dump(_round_floats(payload), fh, indent=2), fh.write("\n")),
            stdout,
        )
    else:
        _write_text(args.out, lambda fh: _emit_csv(header, rows, fh), stdout)
    return 0


def _cmd_diffrate(args, stdout) -> int:
    snr1 = _ratio(args.snr1, args.db)
    inr2 = _ratio(args.inr2, args.db)
    d = _hk.differential_rates(args.z, snr1, inr2)
    _emit_object({"z": args.z, "r1": d.r1, "r2": d.r2}, args, stdout)
    return 0


_COMMANDS = {
    "classify": _cmd_classify,
    "region": _cmd_region,
    "symrate": _cmd_symrate,
    "gap-audit": _cmd_gap_audit,
    "sweep": _cmd_sweep,
    "gdof": _cmd_gdof,
    "figures": _cmd_figures,
    "diffrate": _cmd_diffrate,
}


def main(argv: Sequence[str] | None = None, stdout=None) -> int:
    """Run one subcommand; returns the process exit code."""
    stdout = sys.stdout if stdout is None else stdout
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args, stdout)
    except GicapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())
