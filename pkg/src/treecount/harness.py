"""Exhaustive and randomized conjecture searches and report serialization."""
from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Iterable, Iterator

from .bounds import BOUND_NAMES, BoundReport, conjecture_report
from .errors import TooLarge
from .generators import GeneratorSpec, derive_seed, generate
from .graph import BipartiteGraph, all_patterns, is_connected

MAX_EXHAUSTIVE_CELLS = 20

CSV_COLUMNS = ("graph_id", "n", "m", "edges", "degrees_left", "degrees_right", "is_ferrers",
               "regularity", "tau", "ehrenborg", "bozkurt", "grimmett", "intermediate",
               "min_tightness", "violations")


def connected_patterns(n: int, m: int) -> Iterator[BipartiteGraph]:
    if n * m > MAX_EXHAUSTIVE_CELLS:
        raise TooLarge(f"2^{n * m} patterns exceeds the n*m <= {MAX_EXHAUSTIVE_CELLS} guardrail")
    return (g for g in all_patterns(n, m) if is_connected(g))


def _map(fn, items: Iterable, jobs: int) -> list:
    if jobs <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=64))


def canonical_order(reports: list[BoundReport]) -> list[BoundReport]:
    return sorted(reports, key=lambda r: (r.n, r.m, int(r.graph_id, 16)))


def search_exhaustive(n: int, m: int, jobs: int = 1) -> list[BoundReport]:
    """Report on every connected graph among the ``2**(n*m)`` adjacency patterns.

    Graphs are distinct as labeled adjacency patterns; no isomorphism reduction.
    """
    return canonical_order(_map(conjecture_report, connected_patterns(n, m), jobs))


def sweep_graphs(spec: GeneratorSpec, trials: int) -> Iterator[BipartiteGraph]:
    """``trials`` graphs, trial ``t`` drawn with ``derive_seed(spec.seed, t)``."""
    for t in range(trials):
        yield generate(GeneratorSpec(spec.family, spec.n, spec.m, p=spec.p, a=spec.a,
                                     b=spec.b, seed=derive_seed(spec.seed, t)))


def sweep(spec: GeneratorSpec, trials: int, jobs: int = 1) -> list[BoundReport]:
    return canonical_order(_map(conjecture_report, sweep_graphs(spec, trials), jobs))


def _fmt_exact(x) -> str:
    if x is None:
        return ""
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return repr(x)


def _json_number(x):
    if isinstance(x, Fraction):
        return {"num": str(x.numerator), "den": str(x.denominator)}
    return x


def csv_row(r: BoundReport) -> dict:
    row = {
        "graph_id": r.graph_id, "n": r.n, "m": r.m,
        "edges": ";".join(f"{i}-{j}" for i, j in r.edges),
        "degrees_left": ";".join(map(str, r.degrees_left)),
        "degrees_right": ";".join(map(str, r.degrees_right)),
        "is_ferrers": str(r.is_ferrers).lower(),
        "regularity": r.regularity.kind.value,
        "tau": r.tau,
        "min_tightness": _fmt_exact(r.min_tightness),
        "violations": ";".join(r.violations),
    }
    for name in BOUND_NAMES:
        row[name] = _fmt_exact(r.bound(name).value)
    return row


def to_csv(reports: Iterable[BoundReport]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for r in reports:
        writer.writerow(csv_row(r))
    return buf.getvalue()


def report_dict(r: BoundReport) -> dict:
    return {
        "graph_id": r.graph_id, "n": r.n, "m": r.m, "edge_count": r.edge_count,
        "edges": [list(e) for e in r.edges],
        "degrees_left": list(r.degrees_left), "degrees_right": list(r.degrees_right),
        "regularity": {"kind": r.regularity.kind.value,
                       "left_degree": r.regularity.left_degree,
                       "right_degree": r.regularity.right_degree},
        "is_ferrers": r.is_ferrers,
        "tau": r.tau,
        "bounds": [{"name": b.name, "value": _json_number(b.value),
                    "applicable": b.applicable, "reason": b.reason} for b in r.bounds],
        "tightness": r.tightness,
        "violations": r.violations,
        "counterexample_candidate": r.counterexample_candidate,
    }


def to_json(reports: Iterable[BoundReport]) -> str:
    return json.dumps([report_dict(r) for r in reports], indent=2) + "\n"


def to_text(reports: Iterable[BoundReport]) -> str:
    lines = []
    for r in reports:
        lines.append(f"graph {r.graph_id} (n={r.n}, m={r.m}, |E|={r.edge_count}, "
                     f"{r.regularity.kind.value}{', ferrers' if r.is_ferrers else ''})")
        lines.append(f"  tau = {r.tau}")
        for b in r.bounds:
            if b.applicable:
                lines.append(f"  {b.name} = {_fmt_exact(b.value)}"
                             f"  (tightness {r.tightness[b.name]:.6f})")
            else:
                lines.append(f"  {b.name}: not applicable ({b.reason})")
        lines.append(f"  violations: {', '.join(r.violations) or 'none'}")
    return "\n".join(lines) + "\n"


FORMATTERS = {"csv": to_csv, "json": to_json, "text": to_text}
