"""Command-line interface: ``twobridge poly | render | table | verify``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formulas, fox
from .errors import KindError, ParamError
from .fraction import TwoBridgeParam, mirror_normalize, needs_mirror, new_param, valid_params
from .records import OutputRecord, records_to_csv, records_to_json
from .render import WALKS_1D, render
from .verify import all_passed, verify
from .walks import (
    poly_from_1d_crossings,
    poly_from_1d_visits,
    poly_from_2d_visits,
    walk_1d_hartley,
    walk_1d_minkus,
    walk_2d,
)

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_MISMATCH = 3

METHODS = ("walk", "formula", "fox", "all")


class UsageError(Exception):
    pass


class RouteMismatch(Exception):
    pass


def _param(p: int, q: int) -> TwoBridgeParam:
    if needs_mirror(p, q):
        param = mirror_normalize(p, q)
        print(f"warning: p={p} is even; using the mirror image {param}", file=sys.stderr)
        return param
    return new_param(p, q)


def _routes(param: TwoBridgeParam, two_variable: bool, method: str) -> dict:
    if two_variable:
        if not param.is_link:
            raise UsageError(f"--two-variable needs q even (a link), got {param}")
        table = {
            "walk": lambda: poly_from_2d_visits(walk_2d(param)),
            "formula": lambda: formulas.two_variable_poly(param),
            "fox": lambda: fox.alexander_via_fox(param),
        }
    else:
        if method == "fox":
            raise UsageError("the fox route computes the two-variable polynomial; add --two-variable")
        table = {
            "walk": lambda: poly_from_1d_visits(walk_1d_minkus(param)),
            "shifted-walk": lambda: poly_from_1d_crossings(walk_1d_hartley(param)),
            "formula": lambda: formulas.minkus_poly(param),
        }
    if method == "all":
        return {name: fn() for name, fn in table.items()}
    return {method: table[method]()}


def cmd_poly(args) -> int:
    param = _param(args.p, args.q)
    results = _routes(param, args.two_variable, args.method)
    polys = list(results.values())
    if any(poly != polys[0] for poly in polys[1:]):
        detail = "; ".join(f"{name}: {poly}" for name, poly in results.items())
        raise RouteMismatch(f"routes disagree for {param}: {detail}")
    walk = None
    if args.trace:
        walk = walk_2d(param).positions if args.two_variable else walk_1d_minkus(param).positions
    record = OutputRecord.build(param, polys[0], walk)
    if args.json:
        print(record.to_json())
    else:
        print(str(record.polynomial))
    return EXIT_OK


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8", newline="")


def cmd_render(args) -> int:
    param = _param(args.p, args.q)
    if args.dim == 2 and args.walk != "minkus":
        raise UsageError("--walk applies to --dim 1 only")
    _emit(render(param, args.dim, args.format, args.walk), args.out)
    return EXIT_OK


def table_records(qmax: int, *, knots: bool = True, links: bool = True, reduced: bool = False) -> list[OutputRecord]:
    records = []
    for param in valid_params(qmax, knots=knots, links=links):
        if param.is_link and not reduced:
            poly = formulas.two_variable_poly(param)
        else:
            poly = formulas.minkus_poly(param)
        records.append(OutputRecord.build(param, poly))
    return records


def cmd_table(args) -> int:
    if args.qmax < 2:
        raise UsageError("--qmax must be at least 2")
    records = table_records(args.qmax, knots=not args.links_only, links=not args.knots_only, reduced=args.reduced)
    text = records_to_csv(records) if args.format == "csv" else records_to_json(records)
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.qmax < 2:
        raise UsageError("--qmax must be at least 2")
    results = verify(args.qmax)
    for result in results:
        print(result.line())
    ok = all_passed(results)
    print("all suites pass" if ok else "verification FAILED")
    return EXIT_OK if ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twobridge", description="Alexander polynomials of 2-bridge knots and links.")
    sub = parser.add_subparsers(dest="command", required=True)

    poly = sub.add_parser("poly", help="compute the Alexander polynomial of K(p/q)")
    poly.add_argument("p", type=int)
    poly.add_argument("q", type=int)
    poly.add_argument("--method", choices=METHODS, default="formula")
    poly.add_argument("--two-variable", action="store_true", help="two-variable polynomial (links only)")
    poly.add_argument("--json", action="store_true", help="emit a JSON record")
    poly.add_argument("--trace", action="store_true", help="include walk positions in the JSON record")
    poly.set_defaults(func=cmd_poly)

    rend = sub.add_parser("render", help="draw the walk as SVG or ASCII")
    rend.add_argument("p", type=int)
    rend.add_argument("q", type=int)
    rend.add_argument("--dim", type=int, choices=(1, 2), default=1)
    rend.add_argument("--format", choices=("svg", "ascii"), default="svg")
    rend.add_argument("--walk", choices=WALKS_1D, default="minkus", help="1-D walk variant")
    rend.add_argument("--out", help="output file (default stdout)")
    rend.set_defaults(func=cmd_render)

    table = sub.add_parser("table", help="batch table of polynomials for all q <= QMAX")
    table.add_argument("--qmax", type=int, required=True)
    table.add_argument("--format", choices=("csv", "json"), default="csv")
    only = table.add_mutually_exclusive_group()
    only.add_argument("--links-only", action="store_true")
    only.add_argument("--knots-only", action="store_true")
    table.add_argument("--reduced", action="store_true", help="one-variable reduced polynomial for links")
    table.add_argument("--out", help="output file (default stdout)")
    table.set_defaults(func=cmd_table)

    ver = sub.add_parser("verify", help="run every property suite up to QMAX")
    ver.add_argument("--qmax", type=int, default=200)
    ver.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParamError, KindError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RouteMismatch as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
