import pytest

from treecount.errors import TooLarge
from treecount.graph import build_graph, complete, cycle, from_partition
from treecount.oracle import (brute_tau, degree_histogram, degree_histograms,
                              enumerate_trees)
from treecount.spanning import VertexRef, degree_polynomial, tau

from corpus import STAIRCASE, exhaustive_small


def is_spanning_tree(g, tree):
    """DFS check, deliberately not union-find."""
    size = g.n + g.m
    if len(tree) != size - 1 or len(set(tree)) != len(tree):
        return False
    adj = {v: [] for v in range(size)}
    for i, j in tree:
        if (i, j) not in g.edges:
            return False
        adj[i].append(g.n + j)
        adj[g.n + j].append(i)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == size


class TestEnumerate:
    def test_k2(self):
        assert list(enumerate_trees(complete(1, 1))) == [((0, 0),)]

    def test_k22_omits_one_edge_each(self):
        g = complete(2, 2)
        trees = list(enumerate_trees(g))
        assert len(trees) == 4
        assert {frozenset(g.edges) - frozenset(t) for t in trees} == \
            {frozenset([e]) for e in g.edges}

    def test_disconnected_empty(self):
        assert list(enumerate_trees(build_graph(2, 2, [(0, 0), (1, 1)]))) == []

    def test_lexicographic_and_valid(self):
        for g in exhaustive_small()[:300] + (from_partition(STAIRCASE),):
            trees = list(enumerate_trees(g))
            idx = {e: k for k, e in enumerate(g.edges)}
            keys = [tuple(idx[e] for e in t) for t in trees]
            assert keys == sorted(keys) and len(set(keys)) == len(keys)
            assert all(is_spanning_tree(g, t) for t in trees)

    def test_guardrail(self, monkeypatch):
        with pytest.raises(TooLarge):
            list(enumerate_trees(complete(5, 7)))
        monkeypatch.setenv("TREECOUNT_MAX_EDGES", "3")
        with pytest.raises(TooLarge):
            brute_tau(complete(2, 2))


class TestBruteTau:
    def test_examples(self):
        assert brute_tau(complete(2, 3)) == 12 == 72 // 6
        assert brute_tau(cycle(3)) == 6
        assert brute_tau(from_partition(STAIRCASE)) == 1152


class TestHistogram:
    def test_c6(self):
        for side in ("first", "second"):
            for idx in range(3):
                assert degree_histogram(cycle(3), VertexRef(side, idx)) == {1: 2, 2: 4}

    def test_k22(self):
        assert degree_histogram(complete(2, 2), VertexRef("second", 0)) == {1: 2, 2: 2}

    def test_star_center(self):
        assert degree_histogram(complete(1, 3), VertexRef("first", 0)) == {3: 1}

    def test_single_pass_matches_per_vertex(self):
        g = from_partition((3, 2, 2))
        allh = degree_histograms(g)
        for v, h in allh.items():
            assert dict(h) == degree_histogram(g, v)
            assert sum(h.values()) == tau(g)

    def test_matches_polynomial(self):
        for g in exhaustive_small()[::3]:
            for v, h in degree_histograms(g).items():
                p = degree_polynomial(g, v)
                assert list(p.coeffs) == [h.get(d, 0) for d in range(len(p.coeffs))]
                assert max(h) == p.degree
