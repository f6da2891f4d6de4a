"""Closed-form upper bounds on the number of spanning trees of a bipartite graph.

Bounds that are rational functions of the degrees are returned exactly as
``Fraction``; bounds involving ``exp`` or kept as floats by convention are
returned as ``float`` (computed exactly first where possible).
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import (BoundNotApplicable, Disconnected, InfeasibleK, InvalidTheta,
                     NonSymmetric, NotPSD, NotSingular, ThetaGeqA, TooSmall)
from .graph import (BipartiteGraph, RegularityClass, classify_regularity, degree_product,
                    is_connected, is_ferrers)
from .linalg import det_rat, is_symmetric, minor, sym_eigenvalues
from .spanning import tau

log = logging.getLogger(__name__)

FLOAT_SLACK = 1e-9
EHRENBORG = "ehrenborg"
BOZKURT = "bozkurt"
GRIMMETT = "grimmett"
INTERMEDIATE = "intermediate"
BOUND_NAMES = (EHRENBORG, BOZKURT, GRIMMETT, INTERMEDIATE)


def _require_connected(g: BipartiteGraph) -> None:
    if not is_connected(g):
        raise Disconnected("graph is not connected")


def ehrenborg_bound(g: BipartiteGraph) -> Fraction:
    """``D(G) / (m n)``."""
    return Fraction(degree_product(g), g.m * g.n)


def grimmett_bound(g: BipartiteGraph) -> float:
    """``(N/(N-1))^(N-1) * prod(all degrees) / (2|E|)`` with ``N = n + m``."""
    size = g.n + g.m
    edges = g.edge_count
    if edges == 0:
        raise BoundNotApplicable("graph has no edges")
    exact = Fraction(size, size - 1) ** (size - 1) * Fraction(degree_product(g), 2 * edges)
    return float(exact)


def bozkurt_bound(g: BipartiteGraph) -> Fraction:
    """``D(G) / |E|`` for connected bipartite graphs."""
    _require_connected(g)
    return Fraction(degree_product(g), g.edge_count)


def intermediate_bound_exact(g: BipartiteGraph) -> Fraction:
    _require_connected(g)
    n = g.n
    if n < 2:
        raise TooSmall("needs at least two first-class vertices")
    a, b = g.left_degrees, g.right_degrees
    inv_b = [Fraction(1, d) for d in b]
    diag = [a[i] - sum(inv_b[k] for k in g.neighbors(i)) for i in range(n)]
    denom = sum(diag)
    if denom <= 0:
        raise BoundNotApplicable("reduced-matrix trace is not positive")
    # prod_i (1 - sum_k 1/(a_i b_k)) * prod a_i == prod_i diag_i
    numer = math.prod(diag) * math.prod(b)
    return Fraction(n, n - 1) ** (n - 1) * numer / denom


def intermediate_bound(g: BipartiteGraph) -> float:
    """Bound obtained from the reduced matrix before any regularity assumption."""
    return float(intermediate_bound_exact(g))


@dataclass(frozen=True)
class TailBoundQuery:
    """Biregular parameters for the tail bounds: degrees ``a`` and ``b = a n / m``."""
    n: int
    m: int
    a: int
    theta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "theta", Fraction(self.theta))
        if self.n < 1 or self.m < 1 or self.a < 1:
            raise InfeasibleK("sizes and degree must be positive")
        if (self.a * self.n) % self.m:
            raise InfeasibleK(f"a*n = {self.a * self.n} is not divisible by m = {self.m}")
        if self.theta < 0:
            raise InvalidTheta("theta must be non-negative")
        k = self.theta * self.b / self.a
        if k.denominator != 1:
            raise InfeasibleK(f"k = theta*b/a = {k} is not an integer")
        if not 0 <= k < self.b:
            raise InfeasibleK(f"k = {k} must satisfy 0 <= k < b = {self.b}")

    @classmethod
    def from_k(cls, n: int, m: int, a: int, k: int) -> "TailBoundQuery":
        b = Fraction(a * n, m)
        return cls(n, m, a, Fraction(k) * a / b)

    @property
    def b(self) -> int:
        return self.a * self.n // self.m

    @property
    def k(self) -> int:
        return int(self.theta * self.b / self.a)

    def base(self, denom_m: int) -> Fraction:
        return Fraction(self.a ** self.n * self.b ** self.m, denom_m * self.n)


def theta_factor(theta: float) -> float:
    """``exp((theta-1)/theta) / theta``; never exceeds one for positive theta."""
    return math.exp((theta - 1) / theta) / theta


def _power_factor(q: TailBoundQuery) -> float:
    if q.k == 0:
        return 1.0
    return theta_factor(float(q.theta)) ** q.k


def tail_bound_gt(q: TailBoundQuery) -> float:
    """Upper bound on trees where ``v`` has degree > k (needs theta >= 1)."""
    if q.theta < 1:
        raise InvalidTheta("the strictly-greater tail bound needs theta >= 1")
    return _power_factor(q) * float(q.base(q.m))


def tail_bound_le(q: TailBoundQuery) -> float:
    """Upper bound on trees where ``v`` has degree <= k + 1 (needs theta <= 1)."""
    if q.theta > 1:
        raise InvalidTheta("the at-most tail bound needs theta <= 1")
    if q.m < 2:
        raise TooSmall("the at-most tail bound needs m >= 2")
    return _power_factor(q) * float(q.base(q.m - 1))


def eval_both_exact(q: TailBoundQuery) -> Fraction:
    a, b, k, theta, m = q.a, q.b, q.k, q.theta, q.m
    if theta >= a:
        raise ThetaGeqA(f"theta = {theta} must be below a = {a}")
    shift = Fraction(a) * (theta - 1) / (m * (a - theta)) + 1
    if shift == 0:
        raise TooSmall("degenerate denominator (m = 1 with theta = 0)")
    # theta**0 == 1 covers the theta = k = 0 limit
    numer = Fraction(a - 1) ** (b - k)
    denom = (a - theta) ** (b - k) * theta ** k * shift
    return numer / denom * q.base(m)


def eval_both(q: TailBoundQuery) -> float:
    """Tighter tail expression; both relaxed tail bounds dominate it."""
    return float(eval_both_exact(q))


def remark_bound(n: int, m: int, a: int) -> Fraction:
    """``(1 - 1/a)^b a^n b^m / ((m - 1) n)``: the theta = k = 0 case of ``eval_both``."""
    if m < 2:
        raise TooSmall("needs m >= 2")
    b = Fraction(a * n, m)
    if b.denominator != 1:
        raise InfeasibleK("a*n is not divisible by m")
    b = int(b)
    return (1 - Fraction(1, a)) ** b * Fraction(a ** n * b ** m, (m - 1) * n)


def _as_exact(a) -> list[list[Fraction]] | None:
    try:
        return [[Fraction(x) for x in row] for row in a]
    except TypeError:
        return None


def lemma2_gap(a: Sequence[Sequence]) -> tuple:
    """Both sides of ``sum a_ii det(A|(i,i)) <= (s/(s-1))^(s-1) prod a_ii``.

    Input must be symmetric, PSD and singular.  Integer and rational inputs give
    exact ``Fraction`` sides.  PSD is judged from the Jacobi spectrum with
    tolerance ``1e-9`` scaled by the spectral radius; singularity is decided by
    the exact determinant.
    """
    s = len(a)
    if s < 2:
        raise TooSmall("matrix must be at least 2x2")
    exact = _as_exact(a)
    if exact is None or not is_symmetric(exact):
        raise NonSymmetric("matrix is not symmetric")
    eig = sym_eigenvalues([[float(x) for x in row] for row in exact])
    tol = 1e-9 * max(1.0, max(abs(e) for e in eig))
    if eig[-1] < -tol:
        raise NotPSD(f"smallest eigenvalue {eig[-1]} is negative")
    if det_rat(exact) != 0:
        raise NotSingular("matrix is not singular")
    lhs = sum((exact[i][i] * det_rat(minor(exact, i, i)) for i in range(s)), Fraction(0))
    rhs = Fraction(s, s - 1) ** (s - 1) * math.prod(exact[i][i] for i in range(s))
    return lhs, rhs


@dataclass(frozen=True)
class BoundValue:
    name: str
    value: Fraction | float | None
    reason: str | None = None

    @property
    def applicable(self) -> bool:
        return self.value is not None


@dataclass
class BoundReport:
    graph_id: str
    n: int
    m: int
    edge_count: int
    edges: tuple[tuple[int, int], ...]
    degrees_left: tuple[int, ...]
    degrees_right: tuple[int, ...]
    regularity: RegularityClass
    is_ferrers: bool
    tau: int
    bounds: list[BoundValue]
    tightness: dict[str, float] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)
    near_misses: list[str] = field(default_factory=list)

    @property
    def counterexample_candidate(self) -> bool:
        return EHRENBORG in self.violations

    @property
    def min_tightness(self) -> float | None:
        return min(self.tightness.values()) if self.tightness else None

    def bound(self, name: str) -> BoundValue:
        return next(b for b in self.bounds if b.name == name)


def exceeds(tau_value: int, bound: Fraction | float) -> bool:
    """``tau > bound``: exact for rationals, with relative slack for floats."""
    if isinstance(bound, Fraction):
        return tau_value > bound
    return tau_value > bound * (1 + FLOAT_SLACK)


def _near_miss(tau_value: int, bound: float) -> bool:
    return bound < tau_value <= bound * (1 + FLOAT_SLACK)


def _evaluate(name, fn, g) -> BoundValue:
    try:
        return BoundValue(name, fn(g))
    except (TooSmall, BoundNotApplicable) as exc:
        return BoundValue(name, None, str(exc))


def conjecture_report(g: BipartiteGraph) -> BoundReport:
    """Exact tau next to every bound, with tightness ratios and violations."""
    _require_connected(g)
    t = tau(g)
    bounds = [
        _evaluate(EHRENBORG, ehrenborg_bound, g),
        _evaluate(BOZKURT, bozkurt_bound, g),
        _evaluate(GRIMMETT, grimmett_bound, g),
        _evaluate(INTERMEDIATE, intermediate_bound, g),
    ]
    report = BoundReport(
        graph_id=g.graph_id, n=g.n, m=g.m, edge_count=g.edge_count, edges=g.edges,
        degrees_left=g.left_degrees, degrees_right=g.right_degrees,
        regularity=classify_regularity(g), is_ferrers=is_ferrers(g) is not None,
        tau=t, bounds=bounds)
    for bv in bounds:
        if not bv.applicable:
            continue
        report.tightness[bv.name] = float(Fraction(t) / bv.value) if isinstance(
            bv.value, Fraction) else t / bv.value
        if exceeds(t, bv.value):
            report.violations.append(bv.name)
        elif isinstance(bv.value, float) and _near_miss(t, bv.value):
            report.near_misses.append(bv.name)
            log.warning("near miss on %s bound for graph %s (n=%d, m=%d): tau=%d, bound=%r",
                        bv.name, g.graph_id, g.n, g.m, t, bv.value)
    return report
