"""Command-line front end.

Exit codes: 0 on success (including a verified code), 1 when a code
fails verification or a search proves absence, 2 on usage or file
format errors.  All numeric output is exact rational.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .bounds import (
    bound_ratio,
    bounds_table_csv,
    bounds_table_text,
    grid_code_upper_bound,
    known_bounds_table,
    shell_lower_bound,
)
from .code import FileFormatError, dumps_code, load_code
from .construct import (
    dumps_dominating_set,
    grid_code,
    grid_code_params,
    hamming_code,
    lift_dominating_set,
    lift_king_to_4d,
    load_dominating_set,
)
from .decode import MalformedIdentifyingSet, decode_vertex
from .search import (
    SearchBudget,
    search_king_schedule,
    search_min_dominating_set,
)
from .verify import verify_identifying, verify_torus_naive


def _emit(text: str, out: str | None) -> None:
    if out is None:
        print(text, end="" if text.endswith("\n") else "\n")
    else:
        Path(out).write_text(text if text.endswith("\n") else text + "\n")


def _parse_point(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(c) for c in text.split(","))
    except ValueError:
        raise FileFormatError(f"not a comma-separated integer tuple: {text!r}") from None


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise FileFormatError(f"not a rational number: {text!r}") from None


def _parse_schedule(text: str) -> tuple[tuple[int, int], ...]:
    entries = []
    for item in text.split(","):
        parts = item.lower().split("x")
        if len(parts) != 2:
            raise FileFormatError(f"schedule entries look like 6x3, got {item!r}")
        try:
            entries.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise FileFormatError(f"schedule entries look like 6x3, got {item!r}") from None
    return tuple(entries)


# -- subcommand handlers ----------------------------------------------------


def _cmd_construct_gridcode(args: argparse.Namespace) -> int:
    code = grid_code(grid_code_params(args.n, args.r))
    _emit(dumps_code(code), args.output)
    return 0


def _cmd_construct_domset(args: argparse.Namespace) -> int:
    words = load_dominating_set(args.file)
    code = lift_dominating_set(words)
    _emit(dumps_code(code), args.output)
    return 0


def _cmd_construct_hamming(args: argparse.Namespace) -> int:
    _emit(dumps_dominating_set(hamming_code(args.m)), args.output)
    return 0


def _cmd_construct_lift4d(args: argparse.Namespace) -> int:
    king = load_code(args.king)
    code = lift_king_to_4d(king)
    _emit(dumps_code(code), args.output)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    code = load_code(args.code)
    report = verify_identifying(code, args.r)
    print(report.describe())
    print(f"density: {code.density()}")
    print(f"vertices checked: {report.vertices_checked}, pairs checked: {report.pairs_checked}")
    if args.oracle:
        needed = 4 * args.r + 3
        factors = tuple(-(-needed // p) for p in code.periods)
        oracle = verify_torus_naive(code.inflate(factors), args.r)
        agrees = oracle.identifying == report.identifying
        print(f"torus oracle (inflation factors {factors}): "
              f"{oracle.describe()} -- {'agrees' if agrees else 'DISAGREES'}")
        if not agrees:
            return 1
    return 0 if report.identifying else 1


def _cmd_density(args: argparse.Namespace) -> int:
    print(load_code(args.code).density())
    return 0


def _cmd_decode(args: argparse.Namespace) -> int:
    pair = _parse_point(args.code_params)
    if len(pair) != 2:
        raise FileFormatError("--code-params takes exactly two values: N,R")
    n, r = pair
    params = grid_code_params(n, r)
    vertex = _parse_point(args.ball_of)
    if len(vertex) != n:
        raise FileFormatError(f"vertex must have {n} coordinates")
    code = grid_code(params)
    identifying = code.identifying_set(vertex, r)
    result = decode_vertex(identifying, params)
    print(f"identifying set ({len(identifying)} codewords): "
          + " ".join(str(c) for c in identifying))
    print(f"decoded vertex: {result.vertex}")
    return 0


def _cmd_search_king(args: argparse.Namespace) -> int:
    budget = SearchBudget(
        max_nodes=args.max_nodes, period_schedule=_parse_schedule(args.schedule)
    )
    result = search_king_schedule(_parse_fraction(args.target_density), budget)
    if result.code is None:
        status = "proven absent" if result.complete else "not found (budget exhausted)"
        print(f"{status} after {result.nodes} nodes", file=sys.stderr)
        return 1
    print(f"found after {result.nodes} nodes: periods {result.code.periods}, "
          f"density {result.code.density()}", file=sys.stderr)
    _emit(dumps_code(result.code), args.output)
    return 0


def _cmd_search_domset(args: argparse.Namespace) -> int:
    result = search_min_dominating_set(args.n, SearchBudget(max_nodes=args.max_nodes))
    print(f"size {len(result.words)} "
          f"({'proven minimal' if result.proven_minimal else 'best found within budget'}), "
          f"{result.nodes} nodes", file=sys.stderr)
    _emit(dumps_dominating_set(result.words), args.output)
    return 0


def _cmd_bounds_table(args: argparse.Namespace) -> int:
    entries = known_bounds_table()
    print(bounds_table_csv(entries) if args.csv else bounds_table_text(entries),
          end="" if args.csv else "\n")
    return 0


def _cmd_bounds_lower(args: argparse.Namespace) -> int:
    print(shell_lower_bound(args.n, args.r))
    return 0


def _cmd_bounds_upper(args: argparse.Namespace) -> int:
    print(grid_code_upper_bound(args.n, args.r))
    return 0


def _cmd_bounds_ratio(args: argparse.Namespace) -> int:
    print(bound_ratio(args.n, args.r))
    return 0


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="idcodes",
        description="Identifying codes on the n-dimensional lattice and the king grid.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser("construct", help="build a code and write it out")
    csub = construct.add_subparsers(dest="what", required=True)

    c = csub.add_parser("gridcode", help="spaced parity-grid r-identifying code")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--r", type=int, required=True)
    c.add_argument("-o", "--output")
    c.set_defaults(func=_cmd_construct_gridcode)

    c = csub.add_parser("domset", help="lift a hypercube dominating-set file")
    c.add_argument("--file", required=True)
    c.add_argument("-o", "--output")
    c.set_defaults(func=_cmd_construct_domset)

    c = csub.add_parser("hamming", help="write the Hamming-code dominating set")
    c.add_argument("--m", type=int, required=True)
    c.add_argument("-o", "--output")
    c.set_defaults(func=_cmd_construct_hamming)

    c = csub.add_parser("lift4d", help="lift a king-grid code file to dimension 4")
    c.add_argument("--king", required=True)
    c.add_argument("-o", "--output")
    c.set_defaults(func=_cmd_construct_lift4d)

    v = sub.add_parser("verify", help="check a code file on the infinite lattice")
    v.add_argument("--code", required=True)
    v.add_argument("--r", type=int, required=True)
    v.add_argument("--oracle", action="store_true",
                   help="cross-check with the inflated-torus oracle")
    v.set_defaults(func=_cmd_verify)

    d = sub.add_parser("density", help="exact density of a code file")
    d.add_argument("--code", required=True)
    d.set_defaults(func=_cmd_density)

    dec = sub.add_parser("decode", help="decode a vertex from its identifying set")
    dec.add_argument("--code-params", required=True, metavar="N,R")
    dec.add_argument("--ball-of", required=True, metavar="X1,..,XN",
                     help="vertex whose identifying set is computed and decoded")
    dec.set_defaults(func=_cmd_decode)

    s = sub.add_parser("search", help="exhaustive searches")
    ssub = s.add_subparsers(dest="what", required=True)

    c = ssub.add_parser("king", help="periodic king-grid identifying code")
    c.add_argument("--schedule", default="3x3,6x3,3x6,6x6,9x9",
                   help="comma-separated period boxes, e.g. 3x3,6x6")
    c.add_argument("--target-density", required=True, metavar="P/Q")
    c.add_argument("--max-nodes", type=int, default=20_000_000)
    c.add_argument("-o", "--output")
    c.set_defaults(func=_cmd_search_king)

    c = ssub.add_parser("domset", help="minimum hypercube dominating set")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--max-nodes", type=int, default=20_000_000)
    c.add_argument("-o", "--output")
    c.set_defaults(func=_cmd_search_domset)

    b = sub.add_parser("bounds", help="exact density bounds")
    bsub = b.add_subparsers(dest="what", required=True)

    c = bsub.add_parser("table", help="radius-1 bounds for dimensions 1..10")
    c.add_argument("--csv", action="store_true")
    c.set_defaults(func=_cmd_bounds_table)

    for name, handler in [
        ("lower", _cmd_bounds_lower),
        ("upper", _cmd_bounds_upper),
        ("ratio", _cmd_bounds_ratio),
    ]:
        c = bsub.add_parser(name)
        c.add_argument("--n", type=int, required=True)
        c.add_argument("--r", type=int, required=True)
        c.set_defaults(func=handler)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FileFormatError, MalformedIdentifyingSet) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
