"""Command-line entry point: ``treecount <command> ...``.

Exit codes: 0 success, 1 Ferrers equality failure, 2 bad configuration,
3 Ehrenborg violation (counterexample candidate), 4 I/O error.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import harness
from .bounds import conjecture_report, ehrenborg_bound
from .errors import TreeCountError
from .generators import Family, GeneratorSpec
from .graph import (SOFT_VERTEX_CAP, degree_product, from_partition, parse_graph,
                    parse_partition, partitions_up_to)
from .oracle import brute_tau, degree_histogram
from .spanning import VertexRef, degree_polynomial, tau

EXIT_OK = 0
EXIT_UNEQUAL = 1
EXIT_BAD_CONFIG = 2
EXIT_VIOLATION = 3
EXIT_IO = 4


class BadConfig(TreeCountError):
    pass


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--report", type=Path, help="write the report here")
    common.add_argument("--format", choices=sorted(harness.FORMATTERS),
                        help="report format (default: from the report suffix, else text)")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="treecount",
                                     description="Exact spanning-tree analytics for bipartite graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tau", parents=[common], help="count spanning trees")
    p.add_argument("--graph", required=True, help="graph file ('-' for stdin)")
    p.add_argument("--verify", action="store_true", help="cross-check with brute force")

    p = sub.add_parser("poly", parents=[common], help="degree generating polynomial at a vertex")
    p.add_argument("--graph", required=True)
    p.add_argument("--vertex", required=True, type=VertexRef.parse, help="side:index, e.g. second:0")
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("bounds", parents=[common], help="all bounds for one graph")
    p.add_argument("--graph", required=True)

    p = sub.add_parser("ferrers", parents=[common], help="Ferrers graph equality checks")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--partition", type=parse_partition, help="e.g. 4,4,3,3,1")
    which.add_argument("--all-up-to", nargs=2, type=int, metavar=("N", "M"),
                       help="every partition with at most N parts and largest part at most M")
    p.add_argument("--check-equality", action="store_true")

    p = sub.add_parser("search", parents=[common], help="exhaustive search over adjacency patterns")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("sweep", parents=[common], help="seeded random sweep")
    p.add_argument("--family", required=True, choices=[f.value for f in Family])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    deg = p.add_mutually_exclusive_group()
    deg.add_argument("--a", type=int)
    deg.add_argument("--b", type=int)
    deg.add_argument("--p", type=float)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _read_graph(source: str):
    text = sys.stdin.read() if source == "-" else Path(source).read_text()
    g = parse_graph(text)
    _check_size(g.n, g.m)
    return g


def _check_size(n: int, m: int) -> None:
    if n + m > SOFT_VERTEX_CAP:
        raise BadConfig(f"n + m = {n + m} exceeds the {SOFT_VERTEX_CAP}-vertex guardrail")


def _emit(args, reports) -> None:
    fmt = args.format
    if fmt is None:
        suffix = args.report.suffix.lstrip(".").lower() if args.report else ""
        fmt = suffix if suffix in harness.FORMATTERS else "text"
    body = harness.FORMATTERS[fmt](reports)
    if args.report:
        args.report.write_text(body)
    else:
        sys.stdout.write(body)


def _cmd_tau(args) -> int:
    g = _read_graph(args.graph)
    t = tau(g)
    print(f"tau = {t}")
    if args.verify:
        brute = brute_tau(g)
        print(f"brute force = {brute}, match = {str(brute == t).lower()}")
        if brute != t:
            return EXIT_UNEQUAL
    return EXIT_OK


def _cmd_poly(args) -> int:
    g = _read_graph(args.graph)
    poly = degree_polynomial(g, args.vertex)
    print(f"P(y) = {poly}")
    if args.verify:
        hist = degree_histogram(g, args.vertex)
        ok = all(poly.coefficient(d) == hist.get(d, 0)
                 for d in range(max(poly.degree, max(hist, default=0)) + 1))
        print(f"brute force histogram = {dict(sorted(hist.items()))}, match = {str(ok).lower()}")
        if not ok:
            return EXIT_UNEQUAL
    return EXIT_OK


def _cmd_bounds(args) -> int:
    report = conjecture_report(_read_graph(args.graph))
    _emit(args, [report])
    return EXIT_VIOLATION if report.counterexample_candidate else EXIT_OK


def _ferrers_status(g) -> tuple[int, object]:
    t = tau(g)
    return t, ehrenborg_bound(g)


def _cmd_ferrers(args) -> int:
    if args.partition is not None:
        g = from_partition(args.partition)
        _check_size(g.n, g.m)
        t, bound = _ferrers_status(g)
        if args.check_equality:
            print(f"tau = {t}, D/(mn) = {bound}, equal = {str(t == bound).lower()}")
        else:
            print(f"tau = {t}")
        if args.report:
            _emit(args, [conjecture_report(g)])
        if t > bound:
            return EXIT_VIOLATION
        return EXIT_UNEQUAL if args.check_equality and t != bound else EXIT_OK

    max_n, max_m = args.all_up_to
    _check_size(max_n, max_m)
    graphs = [from_partition(p) for p in partitions_up_to(max_n, max_m)]
    unequal = [g for g in graphs if tau(g) != ehrenborg_bound(g)]
    print(f"checked {len(graphs)} partitions, unequal = {len(unequal)}")
    if args.report:
        _emit(args, harness.canonical_order(harness._map(conjecture_report, graphs, args.jobs)))
    if any(tau(g) > ehrenborg_bound(g) for g in unequal):
        return EXIT_VIOLATION
    return EXIT_UNEQUAL if unequal else EXIT_OK


def _summarize(args, reports) -> int:
    if args.report or args.format:
        _emit(args, reports)
    ehrenborg = sum(r.counterexample_candidate for r in reports)
    other = sum(bool(r.violations) and not r.counterexample_candidate for r in reports)
    print(f"examined {len(reports)} connected graphs, ehrenborg violations = {ehrenborg}, "
          f"other bound violations = {other}")
    return EXIT_VIOLATION if ehrenborg else EXIT_OK


def _cmd_search(args) -> int:
    _check_size(args.n, args.m)
    return _summarize(args, harness.search_exhaustive(args.n, args.m, args.jobs))


def _cmd_sweep(args) -> int:
    _check_size(args.n, args.m)
    family = Family(args.family)
    p = args.p
    if family is Family.RANDOM_CONNECTED and p is None:
        p = 0.5
    spec = GeneratorSpec(family, args.n, args.m, p=p, a=args.a, b=args.b, seed=args.seed)
    return _summarize(args, harness.sweep(spec, args.trials, args.jobs))


COMMANDS = {"tau": _cmd_tau, "poly": _cmd_poly, "bounds": _cmd_bounds,
            "ferrers": _cmd_ferrers, "search": _cmd_search, "sweep": _cmd_sweep}


def run(argv: list[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_BAD_CONFIG if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.jobs < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return EXIT_BAD_CONFIG
    try:
        return COMMANDS[args.command](args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except TreeCountError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_CONFIG


def main() -> None:
    sys.exit(run())
