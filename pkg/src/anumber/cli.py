"""Command line interface.

Four subcommands:

    compute   a-number report for one curve
    matrix    Cartier-Manin matrix dump for one curve
    sweep     evaluate a parameter grid, emit text/json/csv
    verify    sweep a grid and fail if any check mismatches

Exit codes: 0 success, 1 verification found mismatches, 2 usage error,
3 the requested curve failed validation (for example not squarefree).

A curve is named either by --family A|B with --m, or by --poly with the
coefficients of f, constant term first.  Sweeps use all available
cores by default; ANUMBER_THREADS overrides that, and --threads
overrides both.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from .cartier import cartier_matrix, format_matrix
from .curves import (
    CurveFamily,
    CurveSpec,
    CurveValidationError,
    Family,
    generic,
    make_curve,
)
from .ffpoly import DensePolynomial, LimitExceededError, Prime
from .harness import (
    PATTERNS,
    REPORT_COLUMNS,
    ANumberReport,
    SweepGrid,
    evaluate_curve,
    reports_to_csv,
    reports_to_json,
    sweep,
    verify,
)


def _parse_prime(parser: argparse.ArgumentParser, flag: str, raw: int) -> Prime:
    try:
        return Prime(raw)
    except ValueError as err:
        parser.error(f"{flag}: {err}")


def _curve_from_args(parser: argparse.ArgumentParser,
                     args: argparse.Namespace) -> CurveSpec:
    p = _parse_prime(parser, "--p", args.p)
    has_family = args.family is not None or args.m is not None
    if has_family and args.poly is not None:
        parser.error("give --family/--m or --poly, not both")
    if args.poly is not None:
        try:
            coeffs = [int(piece) for piece in args.poly.split(",")]
        except ValueError:
            parser.error(
                f"--poly: expected comma-separated integers, got {args.poly!r}"
            )
        return make_curve(p, generic(DensePolynomial(coeffs, p)))
    if args.family is None or args.m is None:
        parser.error("a curve needs --family with --m, or --poly")
    return make_curve(p, CurveFamily(Family(args.family), m=args.m))


def _grid_from_args(parser: argparse.ArgumentParser,
                    args: argparse.Namespace) -> SweepGrid:
    pieces = [piece.strip() for piece in args.p_list.split(",") if piece.strip()]
    if not pieces:
        parser.error("--p-list: needs at least one prime")
    primes = []
    for piece in pieces:
        try:
            primes.append(Prime(int(piece)))
        except ValueError as err:
            parser.error(f"--p-list: {err}")

    family_names = [n.strip() for n in args.families.split(",") if n.strip()]
    if not family_names:
        parser.error("--families: needs at least one of A,B")
    for name in family_names:
        if name not in ("A", "B"):
            parser.error(f"--families: unknown family {name!r}")
    families = tuple(dict.fromkeys(Family(n) for n in family_names))

    lo, sep, hi = args.k_range.partition("..")
    if not sep or not lo.isdigit() or not hi.isdigit():
        parser.error(f"--k-range: expected LO..HI, got {args.k_range!r}")
    k_range = (int(lo), int(hi))
    if k_range[1] < k_range[0]:
        parser.error(f"--k-range: empty range {args.k_range!r}")

    pattern_names = [n.strip() for n in args.patterns.split(",") if n.strip()]
    if not pattern_names:
        parser.error("--patterns: needs at least one pattern")
    for name in pattern_names:
        if name not in PATTERNS:
            parser.error(f"--patterns: unknown pattern {name!r}")
    patterns = tuple(dict.fromkeys(pattern_names))

    return SweepGrid(primes=tuple(primes), families=families,
                     k_range=k_range, pattern_set=patterns)


def _threads_from_args(parser: argparse.ArgumentParser,
                       args: argparse.Namespace) -> int | None:
    if args.threads is not None:
        if args.threads < 1:
            parser.error("--threads: must be at least 1")
        return args.threads
    raw = os.environ.get("ANUMBER_THREADS", "").strip()
    if not raw:
        return os.cpu_count() or 1
    try:
        value = int(raw)
    except ValueError:
        parser.error(f"ANUMBER_THREADS: expected an integer, got {raw!r}")
    if value < 1:
        parser.error("ANUMBER_THREADS: must be at least 1")
    return value


def _text_value(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _render_report_text(report: ANumberReport) -> str:
    lines = [f"{col}: {_text_value(getattr(report, col))}"
             for col in REPORT_COLUMNS]
    return "\n".join(lines) + "\n"


def _render_table(reports: Sequence[ANumberReport]) -> str:
    rows = [[_text_value(getattr(r, col)) for col in REPORT_COLUMNS]
            for r in reports]
    widths = [max(len(col), *(len(row[i]) for row in rows)) if rows else len(col)
              for i, col in enumerate(REPORT_COLUMNS)]
    out = ["  ".join(col.ljust(widths[i])
                     for i, col in enumerate(REPORT_COLUMNS)).rstrip()]
    for row in rows:
        out.append("  ".join(cell.ljust(widths[i])
                             for i, cell in enumerate(row)).rstrip())
    return "\n".join(out) + "\n"


def _emit(args: argparse.Namespace, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _run_compute(parser, args) -> int:
    report = evaluate_curve(_curve_from_args(parser, args))
    if args.format == "json":
        text = reports_to_json([report])
    elif args.format == "csv":
        text = reports_to_csv([report])
    else:
        text = _render_report_text(report)
    _emit(args, text)
    return 0


def _run_matrix(parser, args) -> int:
    spec = _curve_from_args(parser, args)
    _emit(args, format_matrix(cartier_matrix(spec), spec))
    return 0


def _run_sweep(parser, args) -> int:
    grid = _grid_from_args(parser, args)
    result = sweep(grid, threads=_threads_from_args(parser, args))
    if args.format == "json":
        text = reports_to_json(result.reports)
    elif args.format == "csv":
        text = reports_to_csv(result.reports)
    else:
        parts = [_render_table(result.reports)] if result.reports else []
        for skip in result.skips:
            parts.append(
                f"# skipped {skip.family} p={skip.p} m={skip.m} "
                f"s={skip.s} k={skip.k}: {skip.reason}\n"
            )
        parts.append(
            f"# {len(result.reports)} reports, {len(result.skips)} skipped\n"
        )
        text = "".join(parts)
    _emit(args, text)
    return 0


def _run_verify(parser, args) -> int:
    grid = _grid_from_args(parser, args)
    result = verify(grid, threads=_threads_from_args(parser, args))
    n = len(result.sweep.reports)
    skipped = len(result.sweep.skips)
    if result.mismatches:
        text = (
            f"verify: FAIL ({len(result.mismatches)} mismatches of "
            f"{n} reports, {skipped} skipped)\n"
            + _render_table(result.mismatches)
        )
    else:
        text = f"verify: PASS ({n} reports, {skipped} skipped)\n"
    _emit(args, text)
    return result.exit_status


def _add_curve_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--p", type=int, required=True, metavar="P",
                     help="odd prime modulus")
    sub.add_argument("--family", choices=["A", "B"],
                     help="A is y^2 = x^m + 1, B is y^2 = x^m + x")
    sub.add_argument("--m", type=int, metavar="M",
                     help="exponent m of the family polynomial")
    sub.add_argument("--poly", metavar="C0,C1,...",
                     help="coefficients of f(x), constant term first")


def _add_grid_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--p-list", dest="p_list", required=True,
                     metavar="P1,P2,...", help="comma-separated odd primes")
    sub.add_argument("--families", default="A,B", metavar="A,B",
                     help="comma-separated families (default: A,B)")
    sub.add_argument("--k-range", dest="k_range", default="0..3",
                     metavar="LO..HI", help="inclusive k range (default: 0..3)")
    sub.add_argument("--patterns", default=",".join(PATTERNS),
                     metavar="PAT,...",
                     help="subset of sp+1,sp-1,sp (default: all)")
    sub.add_argument("--threads", type=int, metavar="N",
                     help="worker threads (default: ANUMBER_THREADS, "
                          "else all available cores)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="anumber",
        description="Cartier-Manin matrices and a-numbers of hyperelliptic "
                    "curves y^2 = f(x) in odd characteristic.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    compute = subs.add_parser(
        "compute", help="a-number report for one curve")
    _add_curve_flags(compute)
    compute.add_argument("--format", choices=["text", "json", "csv"],
                         default="text")
    compute.add_argument("--output", metavar="FILE")
    compute.set_defaults(run=_run_compute)

    matrix = subs.add_parser(
        "matrix", help="Cartier-Manin matrix dump for one curve")
    _add_curve_flags(matrix)
    matrix.add_argument("--output", metavar="FILE")
    matrix.set_defaults(run=_run_matrix)

    sweep_cmd = subs.add_parser(
        "sweep", help="evaluate a parameter grid")
    _add_grid_flags(sweep_cmd)
    sweep_cmd.add_argument("--format", choices=["text", "json", "csv"],
                           default="text")
    sweep_cmd.add_argument("--output", metavar="FILE")
    sweep_cmd.set_defaults(run=_run_sweep)

    verify_cmd = subs.add_parser(
        "verify", help="sweep a grid, exit 1 on any mismatch")
    _add_grid_flags(verify_cmd)
    verify_cmd.add_argument("--output", metavar="FILE")
    verify_cmd.set_defaults(run=_run_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.run(parser, args)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else 2
    except (CurveValidationError, LimitExceededError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
