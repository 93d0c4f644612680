"""Command-line front door.

Subcommands: eval (one point), fixtures (verify a fixture table), bench
(time a case), regions (dump the accuracy's region map), map (scan an
expansion's applicability border).  Exit codes: 0 success, 1 any fixture
row failed, 2 usage errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from ..core import AccuracyTarget, region_rows
from ..oracle import map_applicability
from .bench import gen_case, run_bench
from .fixtures import (FixtureParseError, format_number, parse_number,
                       resolve_function, verify_fixtures)

__all__ = ["main"]


def _target(digits: int) -> AccuracyTarget:
    t = AccuracyTarget.for_digits(digits)
    if t.clamped:
        print(f"warning: digits {digits} out of range, clamped to {t.sdgt}",
              file=sys.stderr)
    return t


def _coord(text: str) -> float:
    try:
        return parse_number(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad number {text!r}") from None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="faddeyeva",
        description="Complex probability function toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate one function at x + iy")
    p.add_argument("function")
    p.add_argument("x", type=_coord)
    p.add_argument("y", type=_coord)
    p.add_argument("--digits", type=int, default=13)

    p = sub.add_parser("fixtures", help="verify a fixture table")
    p.add_argument("file")
    p.add_argument("--source", default="present",
                   choices=["present", "matlab", "mathematica", "maple"])

    p = sub.add_parser("bench", help="time one benchmark case")
    p.add_argument("function")
    p.add_argument("--case", type=int, required=True, choices=[1, 2, 3, 4])
    p.add_argument("--digits", type=int, default=13)
    p.add_argument("--repeats", type=int, default=10)

    p = sub.add_parser("regions", help="dump the region map for an accuracy")
    p.add_argument("--digits", type=int, default=13)

    p = sub.add_parser("map", help="scan an expansion applicability border")
    p.add_argument("--method", required=True, choices=["cf", "series"])
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--eps", type=float, required=True)

    return parser


def _cmd_eval(args) -> int:
    try:
        fn = resolve_function(args.function)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    outcome = fn(complex(args.x, args.y), _target(args.digits))
    print(f"{format_number(outcome.value.real)}"
          f"\t{format_number(outcome.value.imag)}"
          f"\t{outcome.status.value}")
    return 0


def _cmd_fixtures(args) -> int:
    try:
        report = verify_fixtures(args.file, args.source)
    except FileNotFoundError:
        print(f"no such file: {args.file}", file=sys.stderr)
        return 2
    except FixtureParseError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    for r in report.results:
        flag = "PASS" if r.passed else "FAIL"
        print(f"{flag}\t{r.row.function}\tx={format_number(r.row.x)}"
              f"\ty={format_number(r.row.y)}\tdigits={r.digits:.2f}"
              f"\tneed={r.row.min_digits}\tstatus={r.status.value}")
    worst = report.worst
    print(f"# {report.n_pass} passed, {report.n_fail} failed"
          f" (source={report.source})")
    if worst is not None:
        print(f"# worst digits {worst.digits:.2f} at {worst.row.function}"
              f" x={format_number(worst.row.x)}"
              f" y={format_number(worst.row.y)}")
    return 0 if report.ok else 1


def _cmd_bench(args) -> int:
    target = _target(args.digits)
    case = gen_case(args.case)
    report = run_bench(args.function, target.sdgt, case, args.repeats)
    print(report.row())
    return 0


def _cmd_regions(args) -> int:
    target = _target(args.digits)
    print(f"# region map for {target.sdgt} significant digits")
    print("# region\tmethod\torder\tz_sq_min\ty_sq_rule")
    for row in region_rows(target):
        rule = (f"y_sq {row.y_sq_op} {row.y_sq_bound!r}"
                if row.y_sq_op else "-")
        print(f"{row.region}\t{row.method.value}\t{row.order}"
              f"\t{row.z_sq_min!r}\t{rule}")
    return 0


def _cmd_map(args) -> int:
    report = map_applicability(args.method, args.order, args.eps)
    print("# method\torder\teps\tthreshold_z_sq\tmax_err")
    print(report.row())
    return 0


_COMMANDS = {
    "eval": _cmd_eval,
    "fixtures": _cmd_fixtures,
    "bench": _cmd_bench,
    "regions": _cmd_regions,
    "map": _cmd_map,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize oddities
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _COMMANDS[args.command](args)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
