import csv
import io
import math
from fractions import Fraction

import numpy as np
import pytest

from oracles import resistance_exact, series_parallel_cycle
from rescurv.corpus import random_connected_graph
from rescurv.families import FamilySpec, generate
from rescurv.graph import bfs_distances, laplacian, parse_edge_list
from rescurv.resistance import (
    foster_check,
    kirchhoff_index,
    mckay_check,
    omega_csv,
    resistance_matrix,
)


def _random_graphs(count, seed, max_n):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(2, max_n + 1))
        yield random_connected_graph(rng, n, float(rng.uniform(0, 0.6)))


def test_k2():
    rd = resistance_matrix(parse_edge_list("0 1"))
    assert rd.omega[0, 1] == pytest.approx(1, abs=1e-14)
    assert kirchhoff_index(rd) == pytest.approx(1, abs=1e-14)


def test_p3_series():
    rd = resistance_matrix(parse_edge_list("0 1\n1 2"))
    np.testing.assert_allclose(rd.omega, [[0, 1, 2], [1, 0, 1], [2, 1, 0]], atol=1e-14)


@pytest.mark.parametrize("n", [3, 4, 5, 8, 13])
def test_cycle_resistance_closed_form(n):
    g = generate(FamilySpec("cycle", (n,)))
    rd = resistance_matrix(g)
    hops = bfs_distances(g).dist
    for i in range(n):
        for j in range(n):
            k = int(hops[i, j])
            want = 0 if k == 0 else float(series_parallel_cycle(n, k))
            assert rd.omega[i, j] == pytest.approx(want, abs=1e-12)
            assert want == pytest.approx(k * (n - k) / n)


@pytest.mark.parametrize("n", [2, 3, 6, 11])
def test_complete_resistance(n):
    rd = resistance_matrix(generate(FamilySpec("complete", (n,))))
    off = rd.omega[~np.eye(n, dtype=bool)]
    np.testing.assert_allclose(off, 2 / n, rtol=1e-13)
    assert kirchhoff_index(rd) == pytest.approx(n - 1, rel=1e-13)


def test_c4_kirchhoff():
    rd = resistance_matrix(generate(FamilySpec("cycle", (4,))))
    assert kirchhoff_index(rd) == pytest.approx(5, rel=1e-14)


@pytest.mark.parametrize("text", ["0 1\n1 2\n2 3\n1 3", "0 1\n0 2\n0 3\n0 4\n3 4", "a b\nb c\nc d\nd a\na c"])
def test_matches_exact_rational_oracle(text):
    g = parse_edge_list(text)
    exact = resistance_exact(g.n, g.sorted_edges())
    rd = resistance_matrix(g)
    np.testing.assert_allclose(rd.omega, [[float(x) for x in row] for row in exact], atol=1e-13)


def test_gamma_structure():
    g = generate(FamilySpec("petersen"))
    rd = resistance_matrix(g)
    w = np.linalg.eigvalsh(rd.gamma)
    lam = rd.spectrum.values
    np.testing.assert_allclose(sorted(w), sorted([1.0, *lam[1:]]), atol=1e-12)
    np.testing.assert_allclose(rd.gamma @ np.ones(g.n), np.ones(g.n), atol=1e-13)
    np.testing.assert_allclose(rd.gamma @ rd.gamma_inv, np.eye(g.n), atol=1e-12)


def test_agrees_with_pseudoinverse_route():
    for g in _random_graphs(30, 3, 25):
        pinv = np.linalg.pinv(laplacian(g))
        d = np.diag(pinv)
        omega = d[:, None] + d[None, :] - 2 * pinv
        np.testing.assert_allclose(resistance_matrix(g).omega, omega, atol=1e-9)


def test_metric_property_random():
    for g in _random_graphs(500, 11, 40):
        om = resistance_matrix(g).omega
        assert (np.diag(om) == 0).all()
        off = om[~np.eye(g.n, dtype=bool)]
        assert (off > 0).all()
        # slack[i, j, k] = Omega_ik + Omega_kj - Omega_ij
        slack = om[:, None, :] + om.T[None, :, :] - om[:, :, None]
        assert slack.min() >= -1e-10


def test_bounded_by_hop_distance():
    for g in _random_graphs(100, 12, 30):
        om = resistance_matrix(g).omega
        assert (om <= bfs_distances(g).dist + 1e-10).all()


def test_rayleigh_monotonicity():
    rng = np.random.default_rng(13)
    for g in _random_graphs(500, 14, 30):
        missing = [(i, j) for i in range(g.n) for j in range(i + 1, g.n) if (i, j) not in g.edges]
        if not missing:
            continue
        i, j = missing[int(rng.integers(len(missing)))]
        before = resistance_matrix(g).omega
        after = resistance_matrix(g.with_edge(i, j)).omega
        assert (after - before).max() <= 1e-10


@pytest.mark.parametrize(
    "g",
    [parse_edge_list("0 1\n1 2"), generate(FamilySpec("cycle", (8,))), generate(FamilySpec("petersen"))],
    ids=["P3", "C8", "petersen"],
)
def test_foster_examples(g):
    assert foster_check(g, resistance_matrix(g)) <= 1e-9 * g.n


def test_petersen_foster_exact():
    g = generate(FamilySpec("petersen"))
    exact = resistance_exact(g.n, g.sorted_edges())
    assert sum(exact[i][j] for i, j in g.edges) == 9


@pytest.mark.parametrize(
    "spec, kf",
    [
        (FamilySpec("cycle", (4,)), Fraction(5)),
        (FamilySpec("complete", (3,)), Fraction(2)),
        # 2^3 * sum_k C(3,k)/(2k)
        (FamilySpec("hypercube", (3,)), 8 * sum(Fraction(math.comb(3, k), 2 * k) for k in range(1, 4))),
    ],
)
def test_mckay_examples(spec, kf):
    rd = resistance_matrix(generate(spec))
    assert rd.kirchhoff == pytest.approx(float(kf), rel=1e-13)
    assert mckay_check(rd) <= 1e-8 * rd.kirchhoff


def test_identities_random():
    for g in _random_graphs(100, 15, 40):
        rd = resistance_matrix(g)
        assert foster_check(g, rd) <= 1e-9 * g.n
        assert mckay_check(rd) <= 1e-8 * rd.kirchhoff
        assert rd.kirchhoff >= g.n - 1 - 1e-9


def test_omega_csv():
    g = parse_edge_list("a b\nb c")
    rows = list(csv.reader(io.StringIO(omega_csv(g, resistance_matrix(g)))))
    assert rows[0] == ["a", "b", "c"]
    assert [[round(float(x), 12) for x in r] for r in rows[1:]] == [[0, 1, 2], [1, 0, 1], [2, 1, 0]]


def test_deterministic():
    g = generate(FamilySpec("antiprism", (5,)))
    a, b = resistance_matrix(g), resistance_matrix(g)
    assert a.omega.tobytes() == b.omega.tobytes()
