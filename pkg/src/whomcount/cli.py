"""Command-line interface.

    whomcount hom-path  --m M --n N [--j J]
    whomcount whom-path --m M --n N [--j J]
    whomcount whom-grid --m M --n N --k K [--i I --j J]
    whomcount lattice   --i I --j J --k K [--r R]
    whomcount table     --which {whom-path,hom-path,whom-grid} [--format csv|json|md]
    whomcount verify    --max-m M --max-n N [--max-k K] [--mode dp|brute-force|both]

Exit status: 0 on success, 1 when verification finds a disagreement,
2 on bad arguments.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import grid_counts, lattice, path_counts
from .errors import InvalidQueryError
from .tables import FORMATS, TABLES, TableSpec, render
from .verify import MODES, run_verification

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # One-line diagnostics instead of argparse's usage dump.
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _emit_count(args, query: dict, value: int) -> int:
    if args.format == "json":
        print(json.dumps({"query": query, "count": str(value)}))
    else:
        print(value)
    return EXIT_OK


def _cmd_hom_path(args) -> int:
    query = {"kind": "hom-path", "m": args.m, "n": args.n, "j": args.j}
    if args.j is None:
        value = path_counts.hom_total(args.m, args.n)
    else:
        value = path_counts.hom_anchored(args.m, args.n, args.j)
    return _emit_count(args, query, value)


def _cmd_whom_path(args) -> int:
    query = {"kind": "whom-path", "m": args.m, "n": args.n, "j": args.j}
    if args.j is None:
        value = path_counts.whom_total(args.m, args.n)
    else:
        value = path_counts.whom_anchored(args.m, args.n, args.j)
    return _emit_count(args, query, value)


def _cmd_whom_grid(args) -> int:
    if (args.i is None) != (args.j is None):
        raise UsageError("whom-grid: error: --i and --j must be given together")
    query = {"kind": "whom-grid", "m": args.m, "n": args.n, "k": args.k, "i": args.i, "j": args.j}
    if args.i is None:
        value = grid_counts.whom_grid_total(args.m, args.n, args.k)
    else:
        value = grid_counts.whom_grid_anchored(args.m, args.n, args.k, args.i, args.j)
    return _emit_count(args, query, value)


def _cmd_lattice(args) -> int:
    query = {"kind": "lattice", "i": args.i, "j": args.j, "k": args.k, "r": args.r}
    point = lattice.LatticePoint(args.i, args.j, args.k)
    if args.r is None:
        value = lattice.shortest_path_count(point)
    else:
        value = lattice.ladder_shortest_path_count(args.r, point)
    return _emit_count(args, query, value)


def _cmd_table(args) -> int:
    spec = TableSpec(args.which, args.format, args.m_max, args.n_max, args.all_anchors)
    sys.stdout.write(render(spec))
    return EXIT_OK


def _cmd_verify(args) -> int:
    max_k = args.max_n if args.max_k is None else args.max_k
    report = run_verification(args.max_m, args.max_n, max_k, args.mode)
    query = {"max_m": args.max_m, "max_n": args.max_n, "max_k": max_k, "mode": args.mode}
    print(json.dumps({"query": query, "report": report.to_json()}, indent=2))
    return EXIT_OK if report.failed == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="whomcount", description="Exact (weak) homomorphism counts from paths.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def counting(name, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    p = counting("hom-path", "homomorphisms P_m -> P_n")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--j", type=int, help="image of vertex 0; omit for the total")
    p.set_defaults(func=_cmd_hom_path)

    p = counting("whom-path", "weak homomorphisms P_m -> P_n")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--j", type=int, help="image of vertex 0; omit for the total")
    p.set_defaults(func=_cmd_whom_path)

    p = counting("whom-grid", "weak homomorphisms P_m -> P_n x P_k")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--i", type=int, help="first coordinate of the image of vertex 0")
    p.add_argument("--j", type=int, help="second coordinate of the image of vertex 0")
    p.set_defaults(func=_cmd_whom_grid)

    p = counting("lattice", "shortest paths in the (r-ladder) cubic lattice")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, help="ladder width; omit for the unrestricted lattice")
    p.set_defaults(func=_cmd_lattice)

    p = sub.add_parser("table", help="reproduce the published count tables")
    p.add_argument("--which", choices=TABLES, required=True)
    p.add_argument("--format", choices=FORMATS, default="csv")
    p.add_argument("--m-max", type=int, default=8)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--all-anchors", action="store_true", help="list every anchor 0..n-1")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify", help="check closed forms against oracles")
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--max-k", type=int, help="defaults to --max-n")
    p.add_argument("--mode", choices=MODES, default="dp")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except (UsageError, InvalidQueryError) as exc:
        msg = str(exc)
        if not msg.startswith("whomcount"):
            msg = f"whomcount: error: {msg}"
        print(msg, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
