"""Barycentric grids and the Kuhn triangulation of the standard simplex.

Grid vertices at mesh ``m`` are integer vectors ``x`` with ``d + 1``
nonnegative entries summing to ``m``; the embedded point is ``x / m``.

Cells are encoded by a base vertex and a permutation of ``1..d``.  Step
``j`` moves one unit of mass from coordinate ``j - 1`` to coordinate ``j``
(in cumulative coordinates ``z_j = x_j + ... + x_d`` it is the unit vector
``e_j``), so every cell is a Freudenthal simplex of the cube lattice
clipped to ``m >= z_1 >= ... >= z_d >= 0``.  There are exactly ``m**d``
of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

import numpy as np

from .validation import check_barycentric_point, check_int

BarycentricPoint = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class SmallSimplex:
    """One cell of the triangulation, vertices in chain order.

    Equality and hashing ignore vertex order.
    """

    vertices: tuple[BarycentricPoint, ...]

    def __eq__(self, other):
        if not isinstance(other, SmallSimplex):
            return NotImplemented
        return frozenset(self.vertices) == frozenset(other.vertices)

    def __hash__(self):
        return hash(frozenset(self.vertices))

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    @property
    def mesh(self) -> int:
        return sum(self.vertices[0])

    def embedded(self) -> np.ndarray:
        """Vertex coordinates on the probability simplex, one row each."""
        return np.asarray(self.vertices, dtype=float) / self.mesh

    def facet(self, drop: int) -> tuple[BarycentricPoint, ...]:
        return self.vertices[:drop] + self.vertices[drop + 1:]


def step(x: BarycentricPoint, j: int) -> BarycentricPoint:
    """Move one unit from coordinate ``j - 1`` to coordinate ``j``."""
    y = list(x)
    y[j] += 1
    y[j - 1] -= 1
    return tuple(y)


def unstep(x: BarycentricPoint, j: int) -> BarycentricPoint:
    y = list(x)
    y[j] -= 1
    y[j - 1] += 1
    return tuple(y)


def kuhn_vertices(base: BarycentricPoint, perm: tuple[int, ...]) -> tuple[BarycentricPoint, ...]:
    verts = [base]
    for j in perm:
        verts.append(step(verts[-1], j))
    return tuple(verts)


def _compositions(total: int, parts: int):
    # descending lexicographic: the first point is total * e_0
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def grid_points(d: int, m: int) -> list[BarycentricPoint]:
    """All grid vertices of the ``d``-simplex at mesh ``m``.

    Points come in descending lexicographic order, starting from
    ``(m, 0, ..., 0)``; there are ``C(m + d, d)`` of them.
    """
    d = check_int(d, "d", 0)
    m = check_int(m, "m", 1)
    return list(_compositions(m, d + 1))


@lru_cache(maxsize=64)
def _triangulate(d: int, m: int) -> tuple[SmallSimplex, ...]:
    cells = []
    perms = list(permutations(range(1, d + 1)))
    for base in _compositions(m, d + 1):
        for perm in perms:
            verts = kuhn_vertices(base, perm)
            if all(min(v) >= 0 for v in verts):
                cells.append(SmallSimplex(verts))
    return tuple(cells)


def triangulate(d: int, m: int) -> list[SmallSimplex]:
    """Kuhn triangulation of the ``d``-simplex into ``m**d`` cells.

    Cells are ordered by base vertex (descending lexicographic), then by
    permutation (lexicographic).
    """
    d = check_int(d, "d", 1)
    m = check_int(m, "m", 1)
    return list(_triangulate(d, m))


def embed(p, mesh: int | None = None) -> np.ndarray:
    """Map an integer grid vertex to the probability simplex."""
    coords = check_barycentric_point(p, mesh)
    return np.asarray(coords, dtype=float) / sum(coords)
