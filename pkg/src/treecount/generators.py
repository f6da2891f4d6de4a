"""Seeded random bipartite graph families.

All randomness comes from SplitMix64 (Steele, Lea & Flood 2014): the state
advances by ``0x9E3779B97F4A7C15`` and each output is the state passed through
the fixed 64-bit finalizer below.  Bounded integers use rejection sampling on
the top of the range, floats take the high 53 bits.  The algorithm is fixed so
that a seed names the same graph in any implementation.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import ConnectivityRetriesExhausted, InfeasibleSpec
from .graph import BipartiteGraph, complete, is_connected

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MAX_ATTEMPTS = 10_000


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)``."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - (1 << 64) % bound
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample(self, population: int, k: int) -> list[int]:
        """``k`` distinct values from ``range(population)`` (partial Fisher-Yates)."""
        pool = list(range(population))
        for i in range(k):
            j = i + self.below(population - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]


def derive_seed(seed: int, index: int) -> int:
    """Independent per-trial seed: one SplitMix64 step from ``seed + index*gamma``."""
    return SplitMix64((seed + index * GOLDEN_GAMMA) & MASK64).next_u64()


class Family(str, Enum):
    COMPLETE = "complete"
    RANDOM_CONNECTED = "random-connected"
    RANDOM_RIGHT_REGULAR = "random-right-regular"
    RANDOM_BIREGULAR = "random-biregular"


@dataclass(frozen=True)
class GeneratorSpec:
    family: Family
    n: int
    m: int
    p: float | None = None
    a: int | None = None
    b: int | None = None
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if self.n < 1 or self.m < 1:
            raise InfeasibleSpec("sizes must be positive")
        fam = self.family
        if fam is Family.RANDOM_CONNECTED:
            if self.p is None or not 0.0 < self.p <= 1.0:
                raise InfeasibleSpec("random-connected needs 0 < p <= 1")
        elif fam is Family.RANDOM_RIGHT_REGULAR:
            if self.b is None or not 1 <= self.b <= self.n:
                raise InfeasibleSpec("random-right-regular needs 1 <= b <= n")
        elif fam is Family.RANDOM_BIREGULAR:
            a, b = self.a, self.b
            if a is None and b is not None and (b * self.m) % self.n == 0:
                a = b * self.m // self.n
            if b is None and a is not None and (a * self.n) % self.m == 0:
                b = a * self.n // self.m
            if a is None or b is None or a * self.n != b * self.m:
                raise InfeasibleSpec("random-biregular needs a*n == b*m")
            if not (1 <= a <= self.m and 1 <= b <= self.n):
                raise InfeasibleSpec("degrees exceed the opposite side size")
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)


def _random_connected(spec: GeneratorSpec, rng: SplitMix64) -> BipartiteGraph:
    adj = []
    for _ in range(spec.n):
        mask = 0
        for j in range(spec.m):
            if rng.random() < spec.p:
                mask |= 1 << j
        adj.append(mask)
    return BipartiteGraph(spec.n, spec.m, tuple(adj))


def _random_right_regular(spec: GeneratorSpec, rng: SplitMix64) -> BipartiteGraph:
    adj = [0] * spec.n
    for j in range(spec.m):
        for i in rng.sample(spec.n, spec.b):
            adj[i] |= 1 << j
    return BipartiteGraph(spec.n, spec.m, tuple(adj))


def _random_biregular(spec: GeneratorSpec, rng: SplitMix64) -> BipartiteGraph | None:
    # Configuration-style pairing: each first-class vertex draws ``a`` stubs
    # uniformly from the remaining second-class stubs, skipping vertices it
    # already holds; a row with nothing left to draw rejects the attempt.
    remaining = [spec.b] * spec.m
    adj = []
    for _ in range(spec.n):
        row = 0
        for _ in range(spec.a):
            open_stubs = [(j, c) for j, c in enumerate(remaining) if c and not row >> j & 1]
            total = sum(c for _, c in open_stubs)
            if total == 0:
                return None
            pick = rng.below(total)
            for j, c in open_stubs:
                if pick < c:
                    break
                pick -= c
            row |= 1 << j
            remaining[j] -= 1
        adj.append(row)
    return BipartiteGraph(spec.n, spec.m, tuple(adj))


_DRAW = {
    Family.RANDOM_CONNECTED: _random_connected,
    Family.RANDOM_RIGHT_REGULAR: _random_right_regular,
    Family.RANDOM_BIREGULAR: _random_biregular,
}


def generate(spec: GeneratorSpec) -> BipartiteGraph:
    """Draw a connected graph from ``spec``; a pure function of the spec."""
    if spec.family is Family.COMPLETE:
        return complete(spec.n, spec.m)
    rng = SplitMix64(spec.seed)
    draw = _DRAW[spec.family]
    for _ in range(MAX_ATTEMPTS):
        g = draw(spec, rng)
        if g is not None and is_connected(g):
            return g
    raise ConnectivityRetriesExhausted(
        f"no connected {spec.family.value} graph after {MAX_ATTEMPTS} attempts")
