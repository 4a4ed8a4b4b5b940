import math
from itertools import product

import numpy as np
import pytest
from hypothesis import given, strategies as st

from spernash import SmallSimplex, embed, grid_points, triangulate
from spernash.exceptions import InvalidArgumentError
from spernash.grid import kuhn_vertices, step, unstep


def up_down_cells(m):
    """Independent 2D triangulation: up and down triangles in (a, b) coordinates."""
    pt = lambda a, b: (m - a - b, a, b)
    cells = set()
    for a, b in product(range(m), repeat=2):
        if a + b <= m - 1:
            cells.add(frozenset({pt(a, b), pt(a + 1, b), pt(a, b + 1)}))
        if a + b <= m - 2:
            cells.add(frozenset({pt(a + 1, b), pt(a, b + 1), pt(a + 1, b + 1)}))
    return cells


def test_grid_points_small():
    assert grid_points(1, 1) == [(1, 0), (0, 1)]
    assert grid_points(2, 2) == [(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]


@pytest.mark.parametrize("d,m", list(product(range(0, 5), range(1, 6))))
def test_grid_point_count(d, m):
    pts = grid_points(d, m)
    assert len(pts) == math.comb(m + d, d)
    assert len(set(pts)) == len(pts)
    assert pts == sorted(pts, reverse=True)
    assert all(sum(p) == m and min(p) >= 0 for p in pts)


@pytest.mark.parametrize("m", range(1, 8))
def test_matches_up_down_triangles(m):
    assert {frozenset(c.vertices) for c in triangulate(2, m)} == up_down_cells(m)


def test_one_dimensional_cells_are_segments():
    cells = triangulate(1, 3)
    assert [c.vertices for c in cells] == [((3, 0), (2, 1)), ((2, 1), (1, 2)), ((1, 2), (0, 3))]


@pytest.mark.parametrize("d,m", [(2, 3), (3, 3), (4, 2)])
def test_cells_are_unit_and_nondegenerate(d, m):
    for cell in triangulate(d, m):
        assert cell.dim == d and cell.mesh == m
        v = np.asarray(cell.vertices)
        # consecutive chain vertices differ by one unit move
        assert np.all(np.abs(np.diff(v, axis=0)).sum(axis=1) == 2)
        assert np.linalg.matrix_rank(v[1:] - v[0]) == d


def test_interior_facets_shared_by_two_cells():
    d, m = 3, 3
    owners = {}
    for cell in triangulate(d, m):
        for drop in range(d + 1):
            owners.setdefault(frozenset(cell.facet(drop)), []).append(cell)
    for facet, cells in owners.items():
        on_boundary = any(all(v[i] == 0 for v in facet) for i in range(d + 1))
        assert len(cells) == (1 if on_boundary else 2)


def test_simplex_equality_ignores_order():
    a = SmallSimplex(((2, 0), (1, 1)))
    b = SmallSimplex(((1, 1), (2, 0)))
    assert a == b and hash(a) == hash(b)
    assert len({a, b}) == 1


@given(st.lists(st.integers(0, 5), min_size=2, max_size=5).filter(lambda v: sum(v) > 0))
def test_embed_sums_to_one(coords):
    p = embed(coords)
    assert abs(p.sum() - 1) < 1e-15
    assert np.allclose(p * sum(coords), coords)


@given(st.integers(1, 4), st.integers(1, 6), st.data())
def test_step_unstep_inverse(d, m, data):
    x = data.draw(st.sampled_from(grid_points(d, m)))
    j = data.draw(st.integers(1, d))
    assert unstep(step(x, j), j) == x


def test_kuhn_chain_ends_at_shifted_base():
    base = (2, 0, 0, 0)
    verts = kuhn_vertices(base, (1, 2, 3))
    assert verts[-1] == (1, 0, 0, 1)


@pytest.mark.parametrize("bad", [(0, 1), (1.5, 2), (-1, 1)])
def test_triangulate_rejects_bad_args(bad):
    with pytest.raises(InvalidArgumentError):
        triangulate(*bad)


def test_embed_checks_mesh():
    with pytest.raises(InvalidArgumentError):
        embed((1, 2), mesh=4)
    with pytest.raises(InvalidArgumentError):
        embed((1, -1, 2))
