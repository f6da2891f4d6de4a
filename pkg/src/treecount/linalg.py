"""Exact determinants over Z, Q and Z[y], plus a Jacobi eigenvalue solver.

Matrices are plain lists of rows.  The 0x0 matrix has determinant 1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import IndexOutOfRange, NonIntegerInterpolation, NonSymmetric

IntMatrix = list[list[int]]
RatMatrix = list[list[Fraction]]


def _check_square(a: Sequence[Sequence]) -> int:
    s = len(a)
    if any(len(row) != s for row in a):
        raise ValueError("matrix must be square")
    return s


def det_int(a: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free (Bareiss) elimination.

    Every division in the update is exact, so intermediates stay integral and
    bounded by minors of the input.
    """
    s = _check_square(a)
    if s == 0:
        return 1
    work = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(s - 1):
        if work[k][k] == 0:
            for r in range(k + 1, s):
                if work[r][k] != 0:
                    work[k], work[r] = work[r], work[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = work[k][k]
        row_k = work[k]
        for i in range(k + 1, s):
            row_i = work[i]
            lead = row_i[k]
            for j in range(k + 1, s):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
        prev = pivot
    return sign * work[s - 1][s - 1]


def det_rat(a: Sequence[Sequence[Fraction | int]]) -> Fraction:
    """Clear denominators row by row, take the integer determinant, divide back."""
    s = _check_square(a)
    scaled = []
    scale = 1
    for row in a:
        row = [Fraction(x) for x in row]
        d = math.lcm(*(x.denominator for x in row)) if row else 1
        scaled.append([int(x * d) for x in row])
        scale *= d
    return Fraction(det_int(scaled), scale)


def minor(a: Sequence[Sequence], row: int, col: int) -> list[list]:
    """Copy of ``a`` with one row and one column deleted."""
    s = _check_square(a)
    if not (0 <= row < s and 0 <= col < s):
        raise IndexOutOfRange(f"({row}, {col}) outside a {s}x{s} matrix")
    return [list(r[:col]) + list(r[col + 1:]) for i, r in enumerate(a) if i != row]


def is_symmetric(a: Sequence[Sequence]) -> bool:
    s = _check_square(a)
    return all(a[i][j] == a[j][i] for i in range(s) for j in range(i + 1, s))


@dataclass(frozen=True)
class IntPolynomial:
    """Dense univariate polynomial ``c[0] + c[1] y + ...`` with int coefficients."""
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def constant(cls, value: int) -> "IntPolynomial":
        return cls((value,))

    @classmethod
    def linear(cls, const: int, slope: int) -> "IntPolynomial":
        return cls((const, slope))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def __call__(self, y):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * y + c
        return acc

    def _lift(self, other):
        return other if isinstance(other, IntPolynomial) else IntPolynomial.constant(other)

    def __add__(self, other):
        other = self._lift(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self.coefficient(i) + other.coefficient(i)
                                   for i in range(size)))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            mag = abs(c)
            body = {0: str(mag), 1: "y"}.get(d, f"y^{d}")
            if d > 0 and mag != 1:
                body = f"{mag}{body}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def _as_poly(entry) -> IntPolynomial:
    return entry if isinstance(entry, IntPolynomial) else IntPolynomial.constant(entry)


def evaluate_matrix(a: Sequence[Sequence], t: int) -> IntMatrix:
    return [[_as_poly(x)(t) for x in row] for row in a]


def _interpolate(values: list[int]) -> IntPolynomial:
    """Polynomial through ``(t, values[t])`` for ``t = 0..len(values)-1``.

    Newton forward differences give the binomial-basis coefficients; the
    falling factorials are then expanded into monomials.
    """
    diffs = []
    row = list(values)
    while row:
        diffs.append(row[0])
        row = [y - x for x, y in zip(row, row[1:])]
    coeffs = [Fraction(0)] * len(values)
    falling = [Fraction(1)]  # coefficients of t(t-1)...(t-k+1)
    for k, delta in enumerate(diffs):
        scale = Fraction(delta, math.factorial(k))
        for i, c in enumerate(falling):
            coeffs[i] += scale * c
        nxt = [Fraction(0)] * (len(falling) + 1)
        for i, c in enumerate(falling):
            nxt[i + 1] += c
            nxt[i] -= k * c
        falling = nxt
    if any(c.denominator != 1 for c in coeffs):
        raise NonIntegerInterpolation(f"non-integer coefficients {coeffs}")
    return IntPolynomial(tuple(int(c) for c in coeffs))


def det_poly(a: Sequence[Sequence[IntPolynomial | int]]) -> IntPolynomial:
    """Determinant of a polynomial matrix by evaluation and interpolation.

    With entries of degree at most one the determinant has degree at most ``s``,
    so the nodes ``t = 0..s`` suffice; in general the bound is the sum of the
    row-wise maximum entry degrees.
    """
    s = _check_square(a)
    bound = sum(max((max(_as_poly(x).degree, 0) for x in row), default=0) for row in a)
    values = [det_int(evaluate_matrix(a, t)) for t in range(bound + 1)]
    return _interpolate(values)


def _jacobi_rotate(work: np.ndarray, p: int, q: int) -> None:
    apq = work[p, q]
    theta = (work[q, q] - work[p, p]) / (2.0 * apq)
    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c
    col_p = work[:, p].copy()
    col_q = work[:, q].copy()
    work[:, p] = c * col_p - s * col_q
    work[:, q] = s * col_p + c * col_q
    row_p = work[p, :].copy()
    row_q = work[q, :].copy()
    work[p, :] = c * row_p - s * row_q
    work[q, :] = s * row_p + c * row_q
    work[p, q] = work[q, p] = 0.0


def sym_eigenvalues(a, tol: float = 1e-12, max_sweeps: int = 100) -> list[float]:
    """Eigenvalues of a symmetric matrix, descending, by cyclic Jacobi rotations.

    Sweeps stop once the off-diagonal Frobenius norm drops below
    ``tol * max(1, ||a||_F)``.
    """
    work = np.array(a, dtype=float)
    if work.ndim != 2 or work.shape[0] != work.shape[1]:
        raise ValueError("matrix must be square")
    if not np.array_equal(work, work.T):
        raise NonSymmetric("matrix is not symmetric")
    s = work.shape[0]
    target = tol * max(1.0, float(np.linalg.norm(work)))
    for _ in range(max_sweeps):
        off = float(np.linalg.norm(work - np.diag(np.diag(work))))
        if off < target:
            break
        for p in range(s - 1):
            for q in range(p + 1, s):
                if work[p, q] != 0.0:
                    _jacobi_rotate(work, p, q)
    return sorted((float(x) for x in np.diag(work)), reverse=True)
