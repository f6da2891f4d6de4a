"""End-to-end acceptance checks, one test per criterion.

Run with ``pytest tests/test_acceptance.py -v``; a PASS/FAIL line per
criterion is printed in the terminal summary.
"""
import csv
import io
import random
from contextlib import redirect_stdout
from fractions import Fraction

import pytest

from treecount.bounds import (TailBoundQuery, bozkurt_bound, eval_both, eval_both_exact,
                              exceeds, grimmett_bound, intermediate_bound, lemma2_gap,
                              tail_bound_gt, tail_bound_le)
from treecount.cli import run
from treecount.graph import complete, cycle, degree_product, from_partition
from treecount.linalg import IntPolynomial, det_int, det_rat, minor
from treecount.oracle import brute_tau, degree_histograms
from treecount.spanning import (DegreeTailQuery, VertexRef, degree_polynomial,
                                ferrers_block_minor, ferrers_block_minor_prediction, laplacian,
                                reduced_matrix, tail_count, tau, tau_spectral,
                                transvection_check)

from corpus import (STAIRCASE, RANDOM_SEED, biregular_corpus, exhaustive_3x3, ferrers_up_to,
                    main_corpus, random_connected)

SLACK = 1e-9


def cli(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = run(argv)
    return code, buf.getvalue()


def prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


@pytest.fixture(scope="module")
def sweep_rows(tmp_path_factory):
    """Run the CLI over the whole bound-checking corpus; keep exit codes and rows."""
    out = tmp_path_factory.mktemp("sweep")
    runs = []
    for n in range(1, 13):
        for m in range(1, 12 // n + 1):
            runs.append(["search", "--n", str(n), "--m", str(m)])
    for n in range(1, 6):
        for m in range(1, 6):
            runs.append(["sweep", "--family", "random-connected", "--n", str(n), "--m", str(m),
                         "--trials", "1000", "--seed", str(RANDOM_SEED + 10 * n + m)])
    results = []
    for k, argv in enumerate(runs):
        path = out / f"run{k}.csv"
        code, text = cli(argv + ["--report", str(path)])
        rows = list(csv.DictReader(path.open())) if path.exists() else []
        results.append((argv, code, text, rows))
    return results


@pytest.mark.criterion(1, "Ferrers equality for every partition with n + m <= 12")
def test_c01_ferrers_equality():
    cases = ferrers_up_to(12)
    assert len(cases) == 2 ** 11 - 1
    bad = [p for p, g in cases if Fraction(tau(g)) != Fraction(degree_product(g), g.n * g.m)]
    assert bad == []


@pytest.mark.criterion(2, "partition 4,4,3,3,1: tau = D/(mn) = 1152")
def test_c02_staircase():
    g = from_partition(STAIRCASE)
    assert degree_product(g) == 23040
    assert tau(g) == brute_tau(g) == Fraction(23040, 20) == 1152
    code, text = cli(["ferrers", "--partition", "4,4,3,3,1", "--check-equality"])
    assert code == 0 and text == "tau = 1152, D/(mn) = 1152, equal = true\n"


@pytest.mark.criterion(3, "determinant count equals brute force (3x3 exhaustive + 200 random)")
def test_c03_oracle_equivalence():
    graphs = exhaustive_3x3() + random_connected(200, 10)
    assert len(random_connected(200, 10)) == 200
    assert all(g.n + g.m <= 10 for g in graphs)
    assert [g.graph_id for g in graphs if tau(g) != brute_tau(g)] == []


@pytest.mark.criterion(4, "no Ehrenborg violation: exhaustive n*m <= 12 + 1000 random per class")
def test_c04_conjecture_sweep(sweep_rows):
    total = 0
    for argv, code, text, rows in sweep_rows:
        assert code == 0, argv
        assert "ehrenborg violations = 0" in text, argv
        assert all("ehrenborg" not in r["violations"].split(";") for r in rows)
        total += len(rows)
    assert total >= 25 * 1000


@pytest.mark.criterion(5, "intermediate bound dominates tau; equality on K2,2 and C6")
def test_c05_intermediate(sweep_rows):
    checked = 0
    for _, _, _, rows in sweep_rows:
        for r in rows:
            if r["intermediate"] == "":
                assert r["n"] == "1"       # undefined for a single first-class vertex
                continue
            assert int(r["tau"]) <= float(r["intermediate"]) * (1 + SLACK), r["graph_id"]
            checked += 1
    assert checked > 20000
    assert intermediate_bound(complete(2, 2)) == pytest.approx(4.0, rel=SLACK)
    assert intermediate_bound(cycle(3)) == pytest.approx(6.0, rel=SLACK)


@pytest.mark.criterion(6, "transvection reduction and reduced cofactors reproduce tau")
def test_c06_reduced_matrix():
    for g in main_corpus():
        assert transvection_check(g), g.graph_id
        c = reduced_matrix(g)
        t = tau(g)
        pb = prod(g.right_degrees)
        assert all(det_rat(minor(c, i, i)) * pb == t for i in range(g.n)), g.graph_id


@pytest.mark.criterion(7, "arranged Ferrers minor equals the signed degree product")
def test_c07_block_minor():
    count = 0
    for parts, g in ferrers_up_to(12):
        if len(parts) >= 2 and parts[0] == parts[1]:
            assert det_int(ferrers_block_minor(g)) == ferrers_block_minor_prediction(g), parts
            a, b = sorted(g.left_degrees), sorted(g.right_degrees)
            want = (-1) ** g.n * prod(a[:-1]) * prod(b[:-1])
            assert ferrers_block_minor_prediction(g) == want
            count += 1
    assert count > 500


@pytest.mark.criterion(8, "degree polynomial matches the brute-force degree histogram")
def test_c08_degree_polynomial():
    for g in main_corpus():
        if g.edge_count > 16:
            continue
        t = tau(g)
        for v, hist in degree_histograms(g).items():
            p = degree_polynomial(g, v)
            assert p(1) == t
            assert list(p.coeffs) == [hist.get(d, 0) for d in range(max(hist) + 1)], (g.graph_id, v)
    for side in ("first", "second"):
        for idx in range(3):
            p = degree_polynomial(cycle(3), VertexRef(side, idx))
            assert p == IntPolynomial((0, 2, 4)) and str(p) == "4y^2 + 2y"


def _tail(g, j, k, mode):
    return tail_count(g, DegreeTailQuery(VertexRef("second", j), k, mode))


@pytest.mark.criterion(9, "degree-tail bounds on biregular graphs, plus sharpness")
def test_c09_tail_bounds():
    graphs = biregular_corpus()
    assert len(graphs) == 56
    checks = 0
    for g in graphs:
        a, b = g.left_degrees[0], g.right_degrees[0]
        assert set(g.left_degrees) == {a} and set(g.right_degrees) == {b}
        for k in range(b):
            q = TailBoundQuery.from_k(g.n, g.m, a, k)
            sharp = eval_both(q)       # k < b keeps theta < a; n, m >= 2 here
            for j in range(g.m):
                if q.theta >= 1:
                    assert not exceeds(_tail(g, j, k, "strictly-greater"), tail_bound_gt(q))
                    checks += 1
                if q.theta <= 1:
                    assert not exceeds(_tail(g, j, k + 1, "at-most"), tail_bound_le(q))
                    checks += 1
            if q.theta >= 1:
                assert sharp <= tail_bound_gt(q) * (1 + SLACK)
            if q.theta <= 1:
                assert sharp <= tail_bound_le(q) * (1 + SLACK)
    assert checks > 100
    for g in (complete(2, 2), complete(2, 3)):
        q = TailBoundQuery(g.n, g.m, g.m, 0)
        for j in range(g.m):
            leaves = _tail(g, j, 1, "at-most")
            assert eval_both_exact(q) == leaves
            assert eval_both(q) == pytest.approx(leaves, rel=SLACK)


def _planted_kernel(rng, s):
    r = rng.randint(1, s)
    rows = [[rng.randint(-3, 3) for _ in range(s)] for _ in range(r)]
    z = [rng.randint(-2, 2) for _ in range(s - 1)] + [1]
    for row in rows:
        row[-1] = -sum(x * w for x, w in zip(row[:-1], z[:-1]))
    return [[sum(rows[t][i] * rows[t][j] for t in range(r)) for j in range(s)] for i in range(s)]


@pytest.mark.criterion(10, "cofactor/diagonal inequality on Laplacians and random PSD matrices")
def test_c10_cofactor_gap():
    for g in main_corpus():
        if g.n + g.m >= 2:
            lhs, rhs = lemma2_gap(laplacian(g))
            assert lhs <= rhs, g.graph_id
    rng = random.Random(RANDOM_SEED)
    for _ in range(500):
        lhs, rhs = lemma2_gap(_planted_kernel(rng, rng.randint(2, 10)))
        assert lhs <= rhs
    assert lemma2_gap(laplacian(complete(1, 1))) == (2, 2)


@pytest.mark.criterion(11, "spectral count within 1e-9; Grimmett and Bozkurt bounds dominate")
def test_c11_spectral():
    for g in main_corpus():
        t = tau(g)
        if g.n + g.m <= 12:
            assert abs(tau_spectral(g) - t) / t <= SLACK, g.graph_id
        assert not exceeds(t, grimmett_bound(g))
        assert t <= bozkurt_bound(g)


@pytest.mark.criterion(12, "search --n 3 --m 3 CSV output is byte-identical across runs")
def test_c12_determinism(tmp_path):
    blobs = []
    for name in ("first.csv", "second.csv"):
        path = tmp_path / name
        code, _ = cli(["search", "--n", "3", "--m", "3", "--report", str(path)])
        assert code == 0
        blobs.append(path.read_bytes())
    assert blobs[0] == blobs[1] and blobs[0].count(b"\n") == len(exhaustive_3x3()) + 1
