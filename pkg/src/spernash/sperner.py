"""Fully labeled cells: enumeration, door-to-door walking, and graph parity.

The walk follows the nested faces ``F_0 ⊂ F_1 ⊂ ... ⊂ F_d`` where ``F_k``
is the face spanned by the unit vertices ``e_0..e_k``.  Inside ``F_k`` it
crosses facets labeled ``{0..k-1}``; a cell of ``F_k`` carrying all labels
``{0..k}`` is extended to the ``(k+1)``-cell above it, and a door lying in
``F_{k-1}`` drops the walk back into that face.  Every node of this graph
has degree at most two and the start vertex ``e_0`` has degree one, so the
walk cannot branch and must end at a fully labeled ``d``-cell.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping

import numpy as np

from .exceptions import InconsistentInputError, InconsistentLabelingError, InvalidArgumentError
from .grid import BarycentricPoint, SmallSimplex, grid_points, step, triangulate, unstep
from .labeling import check_admissible
from .validation import check_int


@dataclass(frozen=True)
class LabeledTriangulation:
    dim: int
    mesh: int
    cells: tuple[SmallSimplex, ...]
    labels: Mapping[BarycentricPoint, int]

    @classmethod
    def from_labels(cls, d: int, m: int, labels) -> "LabeledTriangulation":
        """Build from a mapping, or from a sequence in ``grid_points`` order."""
        if not isinstance(labels, Mapping):
            points = grid_points(d, m)
            labels = list(labels)
            if len(labels) != len(points):
                raise InconsistentInputError(
                    f"{len(labels)} labels given for {len(points)} grid points")
            labels = dict(zip(points, (int(lab) for lab in labels)))
        return cls(d, m, tuple(triangulate(d, m)), dict(labels))

    def label(self, v: BarycentricPoint) -> int:
        try:
            return self.labels[v]
        except KeyError:
            raise InconsistentInputError(f"vertex {v} has no label") from None

    def validate(self) -> None:
        for cell in self.cells:
            for v in cell.vertices:
                if not check_admissible(v, self.label(v)):
                    raise InconsistentInputError(
                        f"label {self.labels[v]} is not admissible at {v}")


@dataclass
class UndirectedGraph:
    n_vertices: int
    edges: list[tuple[int, int]] = field(default_factory=list)

    def __post_init__(self):
        for a, b in self.edges:
            if not (0 <= a < self.n_vertices and 0 <= b < self.n_vertices):
                raise InvalidArgumentError(f"edge ({a}, {b}) out of range")

    def degrees(self) -> np.ndarray:
        deg = np.zeros(self.n_vertices, dtype=int)
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1  # a loop lands here twice
        return deg


def handshake_check(g: UndirectedGraph) -> tuple[int, int]:
    """Return ``(degree sum, number of odd-degree vertices)``."""
    deg = g.degrees()
    return int(deg.sum()), int(np.count_nonzero(deg % 2))


def enumerate_fully_labeled(lt: LabeledTriangulation) -> list[SmallSimplex]:
    full = set(range(lt.dim + 1))
    return [cell for cell in lt.cells
            if {lt.label(v) for v in cell.vertices} == full]


def dual_graph(lt: LabeledTriangulation) -> tuple[UndirectedGraph, int]:
    """Door graph of a labeled triangulation.

    Nodes are the cells plus one outside node (returned as the second item);
    two nodes are joined through every facet labeled ``{0..d-1}``.
    """
    d = lt.dim
    door = set(range(d))
    owners: dict[frozenset, list[int]] = {}
    for idx, cell in enumerate(lt.cells):
        for drop in range(d + 1):
            facet = cell.facet(drop)
            if {lt.label(v) for v in facet} == door:
                owners.setdefault(frozenset(facet), []).append(idx)
    outside = len(lt.cells)
    edges = []
    for facet, cells in owners.items():
        if len(cells) == 2:
            edges.append((cells[0], cells[1]))
        elif len(cells) == 1:
            if any(v[d] != 0 for v in facet):
                raise InconsistentLabelingError(
                    "a door facet lies on a boundary face it cannot occupy")
            edges.append((cells[0], outside))
        else:
            raise InconsistentInputError("a facet is shared by more than two cells")
    return UndirectedGraph(outside + 1, edges), outside


def walk(d: int, m: int, label_of: Callable[[BarycentricPoint], int]) -> SmallSimplex:
    """Door-to-door walk from ``m * e_0`` to a fully labeled cell.

    ``label_of`` is called lazily, once per visited vertex; it may raise to
    abort the walk.
    """
    start = (m,) + (0,) * d
    if label_of(start) != 0:
        raise InconsistentLabelingError(f"vertex {start} must carry label 0")
    if d == 0:
        return SmallSimplex((start,))

    k = 1
    base, perm = start, (1,)
    verts = [start, step(start, 1)]
    labels = [0, label_of(verts[1])]
    new = 1
    seen = set()

    while True:
        # arrival: `new` is the vertex outside the facet we came through
        lab = labels[new]
        while lab == k:
            if k == d:
                return SmallSimplex(tuple(verts))
            k += 1
            perm = perm + (k,)
            verts.append(step(verts[-1], k))
            labels.append(label_of(verts[-1]))
            new = k
            lab = labels[new]
        if not 0 <= lab < k:
            raise InconsistentLabelingError(f"label {lab} is not admissible at {verts[new]}")
        drop = next(i for i in range(k + 1) if i != new and labels[i] == lab)

        # a door in the lower face sends the walk back into it
        while drop == k and perm[-1] == k and base[k] == 0:
            k -= 1
            perm = perm[:-1]
            verts.pop()
            labels.pop()
            if k == 0:
                raise InconsistentLabelingError("walk returned to its start vertex")
            drop = labels.index(k)

        key = (base, perm)
        if key in seen:
            raise InconsistentLabelingError("walk revisited a cell")
        seen.add(key)

        if drop == 0:
            base = verts[1]
            perm = perm[1:] + perm[:1]
            verts = verts[1:] + [step(verts[-1], perm[-1])]
            labels = labels[1:]
            new = k
        elif drop == k:
            first = perm[-1]
            base = unstep(verts[0], first)
            perm = (first,) + perm[:-1]
            verts = [base] + verts[:-1]
            labels = [None] + labels[:-1]
            new = 0
        else:
            perm = perm[:drop - 1] + (perm[drop], perm[drop - 1]) + perm[drop + 1:]
            verts[drop] = step(verts[drop - 1], perm[drop - 1])
            new = drop
        if min(verts[new]) < 0:
            raise InconsistentLabelingError("walk left the simplex through a boundary door")
        if new == len(labels):
            labels.append(label_of(verts[new]))
        else:
            labels[new] = label_of(verts[new])


def path_follow(lt: LabeledTriangulation) -> SmallSimplex:
    """Fully labeled cell reached by walking in from the boundary."""
    return walk(lt.dim, lt.mesh, lt.label)


def random_admissible_labeling(d: int, m: int, seed) -> LabeledTriangulation:
    """Uniform labels among the positive coordinates of each grid vertex."""
    d = check_int(d, "d", 1)
    m = check_int(m, "m", 1)
    rng = np.random.default_rng(seed)
    labels = {}
    for v in grid_points(d, m):
        support = [i for i, c in enumerate(v) if c > 0]
        labels[v] = support[int(rng.integers(len(support)))]
    return LabeledTriangulation(d, m, tuple(triangulate(d, m)), labels)
