"""Matrix-Tree computations on bipartite graphs.

Laplacian rows/columns are ordered first class ``0..n-1`` then second class
``0..m-1``, so the matrix splits into a diagonal degree block per side and
the negated bi-adjacency off the diagonal.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import Disconnected, IndexOutOfRange
from .graph import BipartiteGraph, Side, is_connected, is_ferrers
from .linalg import (IntMatrix, IntPolynomial, RatMatrix, det_int, det_poly, det_rat,
                     minor, sym_eigenvalues)


@dataclass(frozen=True)
class VertexRef:
    side: Side
    index: int

    def __post_init__(self):
        object.__setattr__(self, "side", Side(self.side))
        if self.index < 0:
            raise IndexOutOfRange("vertex index must be non-negative")

    def position(self, g: BipartiteGraph) -> int:
        """Row of this vertex in :func:`laplacian`."""
        size = g.n if self.side is Side.FIRST else g.m
        if self.index >= size:
            raise IndexOutOfRange(f"{self.side.value}:{self.index} not in graph")
        return self.index if self.side is Side.FIRST else g.n + self.index

    def degree(self, g: BipartiteGraph) -> int:
        self.position(g)
        if self.side is Side.FIRST:
            return g.left_degrees[self.index]
        return g.right_degrees[self.index]

    @classmethod
    def parse(cls, text: str) -> "VertexRef":
        """Parse ``first:2`` / ``second:0`` (``a:``/``b:`` also accepted)."""
        side, _, idx = text.partition(":")
        side = {"a": "first", "b": "second"}.get(side.strip().lower(), side.strip().lower())
        return cls(Side(side), int(idx))

    def __str__(self):
        return f"{self.side.value}:{self.index}"


class TailMode(str, Enum):
    GREATER = "strictly-greater"
    AT_MOST = "at-most"


@dataclass(frozen=True)
class DegreeTailQuery:
    vertex: VertexRef
    k: int
    mode: TailMode

    def __post_init__(self):
        object.__setattr__(self, "mode", TailMode(self.mode))
        if self.k < 0:
            raise ValueError("threshold k must be non-negative")


def _require_connected(g: BipartiteGraph) -> None:
    if not is_connected(g):
        raise Disconnected("graph is not connected")


def laplacian(g: BipartiteGraph) -> IntMatrix:
    size = g.n + g.m
    lap = [[0] * size for _ in range(size)]
    for i, j in g.edges:
        lap[i][g.n + j] = lap[g.n + j][i] = -1
    for i, d in enumerate(g.left_degrees):
        lap[i][i] = d
    for j, d in enumerate(g.right_degrees):
        lap[g.n + j][g.n + j] = d
    return lap


def tau(g: BipartiteGraph) -> int:
    """Number of spanning trees: the (0, 0) cofactor of the Laplacian."""
    return det_int(minor(laplacian(g), 0, 0))


def tau_spectral(g: BipartiteGraph) -> float:
    """Floating estimate of tau from the Laplacian spectrum (verification only)."""
    _require_connected(g)
    eig = sym_eigenvalues(laplacian(g))
    return math.prod(eig[:-1]) / len(eig)


def reduced_matrix(g: BipartiteGraph) -> RatMatrix:
    """Upper-left block left after eliminating the second class.

    ``c[i][i] = a_i - sum(1/b_k for k ~ i)`` and
    ``c[i][j] = -sum(1/b_k for k ~ i and k ~ j)``.
    """
    _require_connected(g)
    inv_b = [Fraction(1, d) for d in g.right_degrees]
    nbrs = [g.neighbors(i) for i in range(g.n)]
    c = [[Fraction(0)] * g.n for _ in range(g.n)]
    for i in range(g.n):
        c[i][i] = g.left_degrees[i] - sum(inv_b[k] for k in nbrs[i])
        for j in range(i + 1, g.n):
            common = g.adjacency[i] & g.adjacency[j]
            val = -sum((inv_b[k] for k in nbrs[i] if common >> k & 1), Fraction(0))
            c[i][j] = c[j][i] = val
    return c


def reduced_cofactor(g: BipartiteGraph, i: int = 0) -> Fraction:
    return det_rat(minor(reduced_matrix(g), i, i))


def _transvect(x: list[list[Fraction]], i: int, col: int, lam: Fraction) -> None:
    # Left factor adds lam * row(col) to row i; right factor adds lam * column(col)
    # to column i.
    row_src = x[col]
    x[i] = [u + lam * v for u, v in zip(x[i], row_src)]
    for row in x:
        row[i] += lam * row[col]


def transvected_laplacian(g: BipartiteGraph) -> RatMatrix:
    """Laplacian after the shear ``S_ij`` for every edge ``(i, j)``."""
    _require_connected(g)
    x = [[Fraction(v) for v in row] for row in laplacian(g)]
    for i, j in g.edges:
        _transvect(x, i, g.n + j, Fraction(1, g.right_degrees[j]))
    return x


def transvection_check(g: BipartiteGraph) -> bool:
    """True iff the sheared Laplacian is ``diag(C, diag(b))`` exactly."""
    x = transvected_laplacian(g)
    n, size = g.n, g.n + g.m
    c = reduced_matrix(g)
    for r in range(size):
        for s in range(size):
            if r < n and s < n:
                want = c[r][s]
            elif r >= n and s >= n:
                want = g.right_degrees[r - n] if r == s else 0
            else:
                want = 0
            if x[r][s] != want:
                return False
    return True


def generalized_laplacian(g: BipartiteGraph, v: VertexRef) -> list[list[IntPolynomial]]:
    """Weighted Laplacian with weight ``y`` on edges at ``v`` and 1 elsewhere."""
    pos = v.position(g)
    size = g.n + g.m
    zero = IntPolynomial()
    y = IntPolynomial.linear(0, 1)
    one = IntPolynomial.constant(1)
    mat = [[zero] * size for _ in range(size)]
    for i, j in g.edges:
        u, w = i, g.n + j
        weight = y if pos in (u, w) else one
        mat[u][w] = mat[w][u] = -weight
        mat[u][u] = mat[u][u] + weight
        mat[w][w] = mat[w][w] + weight
    return mat


def degree_polynomial(g: BipartiteGraph, v: VertexRef) -> IntPolynomial:
    """Spanning trees counted by the tree-degree of ``v``: coefficient of y^d.

    The cofactor deletes a row/column other than ``v``'s: position 0 for a
    second-class ``v``, position ``n`` for a first-class one.
    """
    _require_connected(g)
    cut = 0 if v.side is Side.SECOND else g.n
    return det_poly(minor(generalized_laplacian(g, v), cut, cut))


def tail_count(g: BipartiteGraph, q: DegreeTailQuery) -> int:
    poly = degree_polynomial(g, q.vertex)
    if q.mode is TailMode.GREATER:
        return sum(poly.coeffs[q.k + 1:])
    return sum(poly.coeffs[:q.k + 1])


def ferrers_block_minor(g: BipartiteGraph) -> IntMatrix:
    """Laplacian in degree-sorted block form, first column and row ``n+1`` removed.

    Requires a Ferrers graph; both sides are ordered by descending degree.
    """
    part = is_ferrers(g)
    if part is None:
        raise ValueError("graph is not a Ferrers graph")
    left = sorted(range(g.n), key=lambda i: (-g.left_degrees[i], i))
    right = sorted(range(g.m), key=lambda j: (-g.right_degrees[j], j))
    order = left + [g.n + j for j in right]
    lap = laplacian(g)
    arranged = [[lap[r][s] for s in order] for r in order]
    return minor(arranged, g.n, 0)


def ferrers_block_minor_prediction(g: BipartiteGraph) -> int:
    """``(-1)^n * prod(a_2..a_n) * prod(b_2..b_m)`` with degrees sorted descending."""
    a = sorted(g.left_degrees, reverse=True)
    b = sorted(g.right_degrees, reverse=True)
    return (-1) ** g.n * math.prod(a[1:]) * math.prod(b[1:])
