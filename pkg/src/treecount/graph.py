"""Bipartite graphs, partitions and Ferrers graphs.

Vertices are split-indexed: first-class vertices ``0..n-1`` and second-class
vertices ``0..m-1``.  Adjacency is stored as one bitmask per first-class
vertex, bit ``j`` set iff the vertex is adjacent to second-class vertex ``j``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import DuplicateEdge, EmptyPartition, EmptySide, GraphError, IndexOutOfRange

SOFT_VERTEX_CAP = 64


@dataclass(frozen=True)
class BipartiteGraph:
    n: int
    m: int
    adjacency: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise EmptySide(f"both sides must be non-empty, got n={self.n}, m={self.m}")
        if len(self.adjacency) != self.n:
            raise GraphError("adjacency must have one mask per first-class vertex")
        full = (1 << self.m) - 1
        for mask in self.adjacency:
            if mask & ~full:
                raise IndexOutOfRange("neighbor index outside 0..m-1")

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as ``(i, j)`` pairs in row-major order."""
        return tuple((i, j) for i, mask in enumerate(self.adjacency)
                     for j in range(self.m) if mask >> j & 1)

    @property
    def edge_count(self) -> int:
        return sum(mask.bit_count() for mask in self.adjacency)

    @cached_property
    def left_degrees(self) -> tuple[int, ...]:
        return tuple(mask.bit_count() for mask in self.adjacency)

    @cached_property
    def right_degrees(self) -> tuple[int, ...]:
        return tuple(self.column_mask(j).bit_count() for j in range(self.m))

    def column_mask(self, j: int) -> int:
        """Bitmask over first-class vertices adjacent to second-class vertex ``j``."""
        out = 0
        for i, mask in enumerate(self.adjacency):
            if mask >> j & 1:
                out |= 1 << i
        return out

    def neighbors(self, i: int) -> list[int]:
        mask = self.adjacency[i]
        return [j for j in range(self.m) if mask >> j & 1]

    @property
    def pattern(self) -> int:
        """Row-major adjacency bit pattern: bit ``i*m + j`` is edge ``(i, j)``."""
        out = 0
        for i, mask in enumerate(self.adjacency):
            out |= mask << (i * self.m)
        return out

    @property
    def graph_id(self) -> str:
        return format(self.pattern, "x")

    def transpose(self) -> "BipartiteGraph":
        """Swap the roles of the two vertex classes."""
        return BipartiteGraph(self.m, self.n,
                              tuple(self.column_mask(j) for j in range(self.m)))

    def __repr__(self):
        return f"BipartiteGraph(n={self.n}, m={self.m}, edges={list(self.edges)})"


class Side(str, Enum):
    FIRST = "first"
    SECOND = "second"


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing sequence of positive integers."""
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise EmptyPartition("partition must have at least one part")
        if parts[-1] < 1:
            raise GraphError(f"parts must be positive: {parts}")
        if any(x < y for x, y in zip(parts, parts[1:])):
            raise GraphError(f"parts must be weakly decreasing: {parts}")

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, idx):
        return self.parts[idx]

    def conjugate(self) -> tuple[int, ...]:
        return tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0]))

    def __str__(self):
        return ",".join(map(str, self.parts))


class Regularity(str, Enum):
    LEFT = "left-regular"
    RIGHT = "right-regular"
    BIREGULAR = "biregular"
    IRREGULAR = "irregular"


@dataclass(frozen=True)
class RegularityClass:
    kind: Regularity
    left_degree: int | None = None
    right_degree: int | None = None

    @property
    def one_side_regular(self) -> bool:
        return self.kind is not Regularity.IRREGULAR


def build_graph(n: int, m: int, edges: Iterable[tuple[int, int]]) -> BipartiteGraph:
    """Build a graph from explicit ``(first, second)`` index pairs."""
    if n < 1 or m < 1:
        raise EmptySide(f"both sides must be non-empty, got n={n}, m={m}")
    adj = [0] * n
    for i, j in edges:
        if not (0 <= i < n and 0 <= j < m):
            raise IndexOutOfRange(f"edge ({i}, {j}) outside {n}x{m}")
        if adj[i] >> j & 1:
            raise DuplicateEdge(f"edge ({i}, {j}) given twice")
        adj[i] |= 1 << j
    return BipartiteGraph(n, m, tuple(adj))


def from_pattern(n: int, m: int, pattern: int) -> BipartiteGraph:
    """Inverse of :attr:`BipartiteGraph.pattern`."""
    row = (1 << m) - 1
    return BipartiteGraph(n, m, tuple(pattern >> (i * m) & row for i in range(n)))


def complete(n: int, m: int) -> BipartiteGraph:
    return BipartiteGraph(n, m, ((1 << m) - 1,) * n)


def cycle(half: int) -> BipartiteGraph:
    """Even cycle on ``2*half`` vertices (``half >= 2``)."""
    edges = [(i, i) for i in range(half)] + [(i, (i + 1) % half) for i in range(half)]
    return build_graph(half, half, edges)


def from_partition(p: Partition | Sequence[int]) -> BipartiteGraph:
    """Ferrers graph: first-class vertex ``i`` is adjacent to ``0..p[i]-1``."""
    if not isinstance(p, Partition):
        p = Partition(tuple(p))
    m = p[0]
    return BipartiteGraph(len(p), m, tuple((1 << part) - 1 for part in p))


def degree_product(g: BipartiteGraph) -> int:
    return math.prod(g.left_degrees) * math.prod(g.right_degrees)


def is_connected(g: BipartiteGraph) -> bool:
    """Breadth-first reachability over both classes, starting at first-class 0."""
    seen_left = 1
    seen_right = 0
    frontier = 1
    full_left = (1 << g.n) - 1
    full_right = (1 << g.m) - 1
    while frontier:
        reach_right = 0
        for i in range(g.n):
            if frontier >> i & 1:
                reach_right |= g.adjacency[i]
        new_right = reach_right & ~seen_right
        seen_right |= new_right
        frontier = 0
        for i in range(g.n):
            if not seen_left >> i & 1 and g.adjacency[i] & new_right:
                frontier |= 1 << i
        seen_left |= frontier
    return seen_left == full_left and seen_right == full_right


def classify_regularity(g: BipartiteGraph) -> RegularityClass:
    left = set(g.left_degrees)
    right = set(g.right_degrees)
    a = left.pop() if len(left) == 1 else None
    b = right.pop() if len(right) == 1 else None
    if a is not None and b is not None:
        return RegularityClass(Regularity.BIREGULAR, a, b)
    if a is not None:
        return RegularityClass(Regularity.LEFT, a, None)
    if b is not None:
        return RegularityClass(Regularity.RIGHT, None, b)
    return RegularityClass(Regularity.IRREGULAR)


def strip_degree_one(g: BipartiteGraph) -> BipartiteGraph:
    """Remove degree-one vertices one at a time until none remain.

    Stops at a single edge so the result always keeps at least one edge.
    First-class leaves are removed before second-class ones, lowest index first.
    """
    n, m, adj = g.n, g.m, list(g.adjacency)
    while sum(mask.bit_count() for mask in adj) > 1:
        leaf = next((i for i in range(n) if adj[i].bit_count() == 1), None)
        if leaf is not None:
            del adj[leaf]
            n -= 1
            continue
        col = next((j for j in range(m)
                    if sum(mask >> j & 1 for mask in adj) == 1), None)
        if col is None:
            break
        low = (1 << col) - 1
        adj = [(mask & low) | (mask >> (col + 1) << col) for mask in adj]
        m -= 1
    return BipartiteGraph(n, m, tuple(adj))


def _ferrers_order(masks: Sequence[int], width: int) -> list[int]:
    # Descending degree, ties broken by neighborhood descending lexicographically
    # (bit 0 is the first letter).
    def key(idx):
        mask = masks[idx]
        return (-mask.bit_count(), tuple(-(mask >> j & 1) for j in range(width)))
    return sorted(range(len(masks)), key=key)


def is_ferrers(g: BipartiteGraph) -> Partition | None:
    """Recover the partition of a Ferrers graph, or ``None``.

    The first-class neighborhoods must form a chain under inclusion and no
    vertex may be isolated (so the recovered partition has ``parts[0] == m``).
    """
    if 0 in g.left_degrees or 0 in g.right_degrees:
        return None
    order = _ferrers_order(g.adjacency, g.m)
    masks = [g.adjacency[i] for i in order]
    for big, small in zip(masks, masks[1:]):
        if small & ~big:
            return None
    return Partition(tuple(mask.bit_count() for mask in masks))


def ferrers_partitions(n: int, m: int) -> Iterator[Partition]:
    """All partitions with exactly ``n`` parts and largest part exactly ``m``."""
    def rec(prefix, remaining, cap):
        if remaining == 0:
            yield Partition(tuple(prefix))
            return
        for part in range(cap, 0, -1):
            prefix.append(part)
            yield from rec(prefix, remaining - 1, part)
            prefix.pop()
    yield from rec([m], n - 1, m)


def partitions_up_to(max_n: int, max_m: int) -> Iterator[Partition]:
    for n in range(1, max_n + 1):
        for m in range(1, max_m + 1):
            yield from ferrers_partitions(n, m)


def all_patterns(n: int, m: int) -> Iterator[BipartiteGraph]:
    """Every one of the ``2**(n*m)`` adjacency patterns, in pattern order."""
    for pattern in range(1 << (n * m)):
        yield from_pattern(n, m, pattern)


def parse_partition(text: str) -> Partition:
    """Parse ``"4,4,3,3,1"``."""
    try:
        parts = tuple(int(tok) for tok in text.replace(" ", "").split(",") if tok)
    except ValueError as exc:
        raise GraphError(f"bad partition {text!r}") from exc
    return Partition(parts)


def parse_graph(text: str) -> BipartiteGraph:
    """Parse the ``n m`` header plus ``i j`` edge-line text format."""
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(line.split())
    if not rows:
        raise GraphError("empty graph file")
    try:
        n, m = map(int, rows[0])
        edges = [(int(i), int(j)) for i, j in rows[1:]]
    except ValueError as exc:
        raise GraphError("malformed graph file") from exc
    return build_graph(n, m, edges)


def format_graph(g: BipartiteGraph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{i} {j}" for i, j in g.edges]
    return "\n".join(lines) + "\n"


def read_graph(path) -> BipartiteGraph:
    with open(path) as fh:
        return parse_graph(fh.read())


def write_graph(g: BipartiteGraph, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_graph(g))
