"""Command-line interface for horoslab.

Usage:
    horoslab classify --c 2 --A 1                 # minimizer of area 1 in the slab 1 <= y <= 2
    horoslab thresholds --d 2 --format json       # threshold areas for c = e^2
    horoslab profile --c 2 --min 0.05 --max 1 --n 10 --format csv
    horoslab verify --suite lemmas --grid 1000    # exit 1 if any check fails

Exit codes: 0 on success, 1 when a verification check fails, 2 on usage or
domain errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from collections.abc import Sequence

from horoslab import verify
from horoslab.analysis import compute_thresholds
from horoslab.errors import DomainError
from horoslab.profile import TIE_TOL, classify, profile_curve, realize
from horoslab.regions import SlabConfig

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

FORMATS = ("plain", "json", "csv")
PROFILE_HEADER = ("area", "min_perimeter", "region_kind")


def format_number(x: float | None) -> str:
    """Format a real with 12 significant digits.

    Values with ``1e-4 <= |x| < 1e6`` are written in positional notation,
    everything else in lowercase scientific notation.  Trailing zeros are
    dropped, so the output is fixed for a given double.

    Example:
        >>> format_number(1.3862943611198906)
        '1.38629436112'
        >>> format_number(2.5e-05)
        '2.5e-05'
        >>> format_number(12345678.0)
        '1.2345678e+06'
    """
    if x is None:
        return ""
    if x == 0.0 or not math.isfinite(x):
        return format(x, ".12g")
    text = format(x, ".12g")
    # decide on the rounded value: 999999.9999999 prints as 1e+06, not 1000000
    if 1e-4 <= abs(float(text)) < 1e6:
        return text if "e" not in text else format(float(text), "f").rstrip("0").rstrip(".")
    mantissa, exponent = format(x, ".11e").split("e")
    if "." in mantissa:
        mantissa = mantissa.rstrip("0").rstrip(".")
    return f"{mantissa}e{exponent}"


def _slab_from_args(args: argparse.Namespace) -> SlabConfig:
    if args.d is not None:
        return SlabConfig.from_width(args.d)
    return SlabConfig(args.c)


def _classification_payload(slab: SlabConfig, area: float, tie_tol: float) -> dict:
    cls = classify(slab, area, tie_tol=tie_tol)
    minimizers = [
        {
            "kind": r.kind,
            "parameter": r.parameter,
            "euclid_center": list(r.euclid_center) if r.euclid_center is not None else None,
            "euclid_radius_or_width": r.euclid_radius_or_width,
        }
        for r in realize(slab, cls)
    ]
    return {
        "c": slab.c,
        "area": area,
        "regime": cls.regime.value,
        "minimizers": minimizers,
        "minimal_perimeter": cls.minimal_perimeter,
        "tie": cls.tie,
    }


def cmd_classify(args: argparse.Namespace) -> int:
    slab = _slab_from_args(args)
    payload = _classification_payload(slab, args.A, args.tie_tol)
    out = sys.stdout
    if args.format == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["kind", "parameter", "euclid_center_x", "euclid_center_y", "euclid_radius_or_width", "minimal_perimeter", "tie"])
        for m in payload["minimizers"]:
            center = m["euclid_center"] or [None, None]
            writer.writerow(
                [
                    m["kind"],
                    format_number(m["parameter"]),
                    format_number(center[0]),
                    format_number(center[1]),
                    format_number(m["euclid_radius_or_width"]),
                    format_number(payload["minimal_perimeter"]),
                    str(payload["tie"]).lower(),
                ]
            )
    else:
        out.write(f"c = {format_number(slab.c)}  (d = {format_number(slab.d)}, regime {payload['regime']})\n")
        out.write(f"area = {format_number(args.A)}\n")
        label = "tie between" if payload["tie"] else "minimizer"
        out.write(f"{label}:\n")
        for m in payload["minimizers"]:
            if m["euclid_center"] is None:
                where = f"width {format_number(m['euclid_radius_or_width'])}"
            else:
                cx, cy = m["euclid_center"]
                where = f"center ({format_number(cx)}, {format_number(cy)}), radius {format_number(m['euclid_radius_or_width'])}"
            param = "" if m["parameter"] is None or m["euclid_center"] is None else f" parameter {format_number(m['parameter'])},"
            out.write(f"  {m['kind']}:{param} {where}\n")
        out.write(f"minimal perimeter = {format_number(payload['minimal_perimeter'])}\n")
    return EXIT_OK


def cmd_thresholds(args: argparse.Namespace) -> int:
    slab = _slab_from_args(args)
    th = compute_thresholds(slab)
    row = {
        "c": th.c,
        "d": th.d,
        "regime": th.regime.value,
        "section_perimeter": th.section_perimeter,
        "A0": th.A0,
        "A1": th.A1,
    }
    out = sys.stdout
    if args.format == "json":
        out.write(json.dumps(row, indent=2) + "\n")
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(list(row))
        writer.writerow([v if isinstance(v, str) else format_number(v) for v in row.values()])
    else:
        for key, value in row.items():
            if value is None:
                value = "absent"
            text = value if isinstance(value, str) else format_number(value)
            out.write(f"{key} = {text}\n")
    return EXIT_OK


def cmd_profile(args: argparse.Namespace) -> int:
    slab = _slab_from_args(args)
    samples = profile_curve(slab, args.A_min, args.A_max, args.n)
    out = sys.stdout
    if args.format == "json":
        rows = [{"area": s.area, "min_perimeter": s.min_perimeter, "region_kind": s.region_kind} for s in samples]
        out.write(json.dumps(rows, indent=2) + "\n")
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(PROFILE_HEADER)
        for s in samples:
            writer.writerow([format_number(s.area), format_number(s.min_perimeter), s.region_kind])
    else:
        out.write(f"{'area':>20} {'min_perimeter':>20}  region_kind\n")
        for s in samples:
            out.write(f"{format_number(s.area):>20} {format_number(s.min_perimeter):>20}  {s.region_kind}\n")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    checks = verify.run(args.suite, args.grid, args.tol)
    failed = sum(not ch.passed for ch in checks)
    out = sys.stdout
    if args.format == "json":
        rows = [{"name": ch.name, "passed": ch.passed, "max_residual": ch.max_residual, "tol": ch.tol} for ch in checks]
        out.write(json.dumps({"checks": rows, "failed": failed}, indent=2) + "\n")
    elif args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["name", "passed", "max_residual", "tol"])
        for ch in checks:
            writer.writerow([ch.name, str(ch.passed).lower(), format_number(ch.max_residual), format_number(ch.tol)])
    else:
        for ch in checks:
            status = "PASS" if ch.passed else "FAIL"
            out.write(f"{status}  {ch.name}  (max residual {format_number(ch.max_residual)}, tol {format_number(ch.tol)})\n")
        out.write(f"{len(checks) - failed}/{len(checks)} checks passed\n")
    return EXIT_OK if failed == 0 else EXIT_FAILED


def _add_slab_args(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--c", type=float, help="height of the upper horocycle y = c (c > 1)")
    group.add_argument("--d", type=float, help="slab width d = ln c, as an alternative to --c")


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=FORMATS, default="plain", help="output format (default: plain)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="horoslab",
        description="Isoperimetric regions in the hyperbolic slab between the horocycles y = 1 and y = c.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="minimizing region(s) for a given area")
    _add_slab_args(p)
    p.add_argument("--A", type=float, required=True, help="enclosed area (> 0)")
    p.add_argument(
        "--tie-tol",
        type=float,
        default=TIE_TOL,
        help=f"areas this close to a threshold take the threshold's outcome (default: {TIE_TOL:g})",
    )
    _add_format(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("thresholds", help="threshold areas A0 and A1")
    _add_slab_args(p)
    _add_format(p)
    p.set_defaults(func=cmd_thresholds)

    p = sub.add_parser("profile", help="isoperimetric profile on a uniform area grid")
    _add_slab_args(p)
    p.add_argument("--min", dest="A_min", type=float, required=True, help="smallest area")
    p.add_argument("--max", dest="A_max", type=float, required=True, help="largest area")
    p.add_argument("--n", type=int, required=True, help="number of samples (>= 2)")
    _add_format(p)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("verify", help="run the numerical verification suites")
    p.add_argument("--suite", choices=(*verify.SUITES, "all"), default="all")
    p.add_argument("--grid", type=int, default=100, help="grid size for parameter sweeps (>= 10)")
    p.add_argument("--tol", type=float, default=None, help="override every check tolerance")
    _add_format(p)
    p.set_defaults(func=cmd_verify)
    return parser


def _validate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    if args.command == "classify" and not args.tie_tol >= 0.0:
        parser.error("--tie-tol must be non-negative")
    if args.command == "verify":
        if args.grid < 10:
            parser.error("--grid must be at least 10")
        if args.tol is not None and not args.tol >= 0.0:
            parser.error("--tol must be non-negative")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
