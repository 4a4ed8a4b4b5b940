"""Exit criteria, each at its stated tolerance.

The summary at the end of the run prints one PASS/FAIL line per criterion.
"""

import math
import time
from itertools import product

import numpy as np
import pytest

from spernash import (
    UndirectedGraph,
    approx_fixed_point,
    enumerate_fully_labeled,
    from_simplex,
    handshake_check,
    oracle_2x2,
    path_follow,
    psi,
    random_admissible_labeling,
    regret,
    solve,
    to_simplex,
    triangulate,
)
from spernash.game import psi_residual

from .conftest import random_profile


def linf(p, q):
    return max(float(np.max(np.abs(np.asarray(a) - np.asarray(b)))) for a, b in zip(p, q))


@pytest.mark.acceptance(1, "prisoners' dilemma solves to (Y,Y) under 5 s")
def test_prisoners_dilemma(pd):
    truth = oracle_2x2(pd)
    assert len(truth) == 1 and linf(truth[0], pd.pure_profile((1, 1))) == 0
    t0 = time.perf_counter()
    res = solve(pd, eps=1e-4, m0=4)
    elapsed = time.perf_counter() - t0
    assert linf(res.profile, truth[0]) <= 1e-3
    assert res.max_regret < 1e-4
    assert elapsed < 5


@pytest.mark.acceptance(2, "battle of the sexes near an oracle equilibrium under 30 s")
def test_battle_of_the_sexes(bos):
    truth = oracle_2x2(bos)
    assert len(truth) == 3
    mixed = [p for p in truth if 0 < p[0][0] < 1]
    assert len(mixed) == 1
    assert mixed[0][0][0] == 2 / 3 and mixed[0][1][0] == 1 / 3
    t0 = time.perf_counter()
    res = solve(bos, eps=1e-4)
    elapsed = time.perf_counter() - t0
    assert res.max_regret < 1e-4
    assert min(linf(res.profile, p) for p in truth) <= 1e-2
    assert elapsed < 30


@pytest.mark.acceptance(3, "odd number of fully labeled cells, d<=3, m<=5, 200 seeds, under 60 s")
def test_sperner_parity():
    t0 = time.perf_counter()
    for d, m, seed in product((1, 2, 3), range(1, 6), range(200)):
        count = len(enumerate_fully_labeled(random_admissible_labeling(d, m, seed)))
        assert count % 2 == 1, (d, m, seed, count)
    assert time.perf_counter() - t0 < 60


@pytest.mark.acceptance(4, "path following lands on an enumerated fully labeled cell")
def test_path_follow_matches_enumeration():
    rng = np.random.default_rng(4)
    for trial in range(100):
        d, m = int(rng.integers(1, 3)), int(rng.integers(1, 6))
        lt = random_admissible_labeling(d, m, 1000 + trial)
        assert path_follow(lt) in enumerate_fully_labeled(lt), (d, m, trial)


@pytest.mark.acceptance(5, "handshaking on random graphs with loops")
def test_handshaking():
    rng = np.random.default_rng(5)
    for _ in range(100):
        n = int(rng.integers(1, 51))
        n_edges = int(rng.integers(0, 3 * n))
        edges = [tuple(int(x) for x in rng.integers(0, n, 2)) for _ in range(n_edges)]
        g = UndirectedGraph(n, edges)
        degree_sum, odd = handshake_check(g)
        assert degree_sum == 2 * len(edges)
        assert odd % 2 == 0


def _volume(cell, d):
    v = cell.embedded()[:, :d]
    return abs(np.linalg.det(v[1:] - v[0])) / math.factorial(d)


@pytest.mark.acceptance(6, "triangulation count, volume and cover")
def test_triangulation():
    rng = np.random.default_rng(6)
    for d, m in product(range(1, 5), range(1, 6)):
        cells = triangulate(d, m)
        assert len(cells) == m**d
        total = sum(_volume(c, d) for c in cells)
        assert abs(total * math.factorial(d) - 1) <= 1e-9
    for d in range(1, 5):
        cells = triangulate(d, 5)
        # vertices sum to one, so barycentric weights solve a square system
        inv = np.linalg.inv(np.stack([c.embedded().T for c in cells]))
        pts = rng.dirichlet(np.ones(d + 1), 10_000)
        covered = np.zeros(len(pts), dtype=bool)
        for chunk in np.array_split(np.arange(len(cells)), max(1, len(cells) // 64)):
            lam = np.einsum("cij,pj->cpi", inv[chunk], pts)
            covered |= np.any(np.all(lam >= -1e-12, axis=2), axis=0)
        assert covered.all(), d


@pytest.mark.acceptance(7, "homeomorphism round trips within 1e-9, centers exact")
@pytest.mark.parametrize("counts", [(2, 2), (2, 3), (3, 2)])
def test_homeomorphism_round_trip(counts):
    rng = np.random.default_rng(7)
    for _ in range(1000):
        p = random_profile(rng, counts)
        assert linf(from_simplex(to_simplex(p), counts), p) <= 1e-9
    d = sum(counts) - len(counts)
    center = [np.full(k, 1.0 / k) for k in counts]
    assert np.array_equal(to_simplex(center), np.full(d + 1, 1.0 / (d + 1)))
    back = from_simplex(np.full(d + 1, 1.0 / (d + 1)), counts)
    assert all(np.array_equal(a, b) for a, b in zip(back, center))


@pytest.mark.acceptance(8, "improvement map invariants and equilibrium equivalence at 1e-12")
@pytest.mark.parametrize("name", ["pd", "bos", "pennies"])
def test_psi_invariants(name, request):
    g = request.getfixturevalue(name)
    rng = np.random.default_rng(8)
    for _ in range(10_000):
        p = random_profile(rng, g.strategy_counts)
        for row in psi(g, p):
            assert row.min() >= 0
            assert abs(row.sum() - 1) <= 1e-12
        # no regret forces a fixed point and a fixed point forces no regret
        if regret(g, p).max() > 1e-9:
            assert psi_residual(g, p) > 0
    for eq in oracle_2x2(g):
        assert psi_residual(g, eq) < 1e-12
        assert regret(g, eq).max() < 1e-12


@pytest.mark.acceptance(9, "contraction fixed point to 1e-6 within 12 refinement levels")
def test_contraction_fixed_point():
    c = np.full(3, 1 / 3)
    res = approx_fixed_point(lambda p: (p + c) / 2, 2, 1e-6, m0=4, max_refine=12, warn=False)
    assert res.refinements_used <= 12
    assert res.residual < 1e-6
    assert np.max(np.abs(res.point - c)) <= 1e-5
