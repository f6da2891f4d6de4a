"""Brute-force spanning tree enumeration, used as ground truth for small graphs."""
from __future__ import annotations

import os
from collections import Counter
from typing import Iterator

from .errors import TooLarge
from .graph import BipartiteGraph
from .spanning import VertexRef

DEFAULT_MAX_EDGES = 30
ENV_MAX_EDGES = "TREECOUNT_MAX_EDGES"

TreeEdgeSet = tuple[tuple[int, int], ...]


def max_edges() -> int:
    """Edge guardrail; ``TREECOUNT_MAX_EDGES`` overrides it at your own runtime risk."""
    raw = os.environ.get(ENV_MAX_EDGES)
    return int(raw) if raw else DEFAULT_MAX_EDGES


def _check_size(g: BipartiteGraph) -> None:
    cap = max_edges()
    if g.edge_count > cap:
        raise TooLarge(f"{g.edge_count} edges exceeds the oracle cap of {cap}")


def _find(parent: list[int], x: int) -> int:
    root = x
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        parent[x], x = root, parent[x]
    return root


def _can_span(parent: list[int], components: int, edges, start: int) -> bool:
    # Can the current forest plus edges[start:] still connect everything?
    if len(edges) - start < components - 1:
        return False
    trial = parent[:]
    left = components
    for u, w in edges[start:]:
        ru, rw = _find(trial, u), _find(trial, w)
        if ru != rw:
            trial[ru] = rw
            left -= 1
            if left == 1:
                return True
    return left == 1


def _vertex_edges(g: BipartiteGraph) -> list[tuple[int, int]]:
    return [(i, g.n + j) for i, j in g.edges]


def enumerate_trees(g: BipartiteGraph) -> Iterator[TreeEdgeSet]:
    """Yield every spanning tree once, lexicographic in edge index.

    Include/exclude backtracking over ``g.edges``; cycles are rejected with a
    union-find and a branch is dropped as soon as the unused edges can no
    longer connect the forest.
    """
    _check_size(g)
    edges = _vertex_edges(g)
    size = g.n + g.m
    target = size - 1
    chosen: list[int] = []

    def rec(idx: int, parent: list[int], components: int):
        if len(chosen) == target:
            yield tuple(g.edges[e] for e in chosen)
            return
        if not _can_span(parent, components, edges, idx):
            return
        u, w = edges[idx]
        ru, rw = _find(parent, u), _find(parent, w)
        if ru != rw:
            joined = parent[:]
            joined[ru] = rw
            chosen.append(idx)
            yield from rec(idx + 1, joined, components - 1)
            chosen.pop()
        yield from rec(idx + 1, parent, components)

    if size == 1:
        yield ()
        return
    yield from rec(0, list(range(size)), size)


def brute_tau(g: BipartiteGraph) -> int:
    return sum(1 for _ in enumerate_trees(g))


def degree_histograms(g: BipartiteGraph) -> dict[VertexRef, Counter]:
    """Tree-degree histogram for every vertex from a single enumeration pass."""
    left = [Counter() for _ in range(g.n)]
    right = [Counter() for _ in range(g.m)]
    for tree in enumerate_trees(g):
        deg_l = [0] * g.n
        deg_r = [0] * g.m
        for i, j in tree:
            deg_l[i] += 1
            deg_r[j] += 1
        for i, d in enumerate(deg_l):
            left[i][d] += 1
        for j, d in enumerate(deg_r):
            right[j][d] += 1
    out = {VertexRef("first", i): c for i, c in enumerate(left)}
    out.update({VertexRef("second", j): c for j, c in enumerate(right)})
    return out


def degree_histogram(g: BipartiteGraph, v: VertexRef) -> dict[int, int]:
    v.position(g)
    side = 0 if v.side.value == "first" else 1
    hist = Counter()
    for tree in enumerate_trees(g):
        hist[sum(1 for e in tree if e[side] == v.index)] += 1
    return dict(hist)
