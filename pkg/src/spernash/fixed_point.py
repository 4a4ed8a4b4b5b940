"""Approximate fixed points of self-maps of the simplex by mesh refinement."""

from __future__ import annotations

import logging
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .exceptions import InvalidArgumentError, MapContractViolation, ToleranceNotReachedWarning
from .grid import SmallSimplex, grid_points, triangulate
from .labeling import DEFAULT_EXACT_TOL, LabelOutcome, _label
from .sperner import LabeledTriangulation, enumerate_fully_labeled, walk
from .validation import check_int, check_positive_float, check_simplex_point

logger = logging.getLogger(__name__)

SelfMap = Callable[[np.ndarray], np.ndarray]

SEARCH_METHODS = ("auto", "exhaustive", "path")
# beyond this many cells "auto" stops labeling the whole grid
EXHAUSTIVE_CELL_LIMIT = 4096


@dataclass
class FixedPointResult:
    point: np.ndarray
    residual: float
    refinements_used: int
    mesh: int
    converged: bool
    exact_hit: bool = False
    candidate_trace: list[tuple[int, np.ndarray, float]] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "solved" if self.converged else "tolerance-not-reached"


class _ExactHit(Exception):
    def __init__(self, point):
        super().__init__("grid vertex is a fixed point")
        self.point = point


def _image(f: SelfMap, p: np.ndarray) -> np.ndarray:
    return check_simplex_point(f(p), dim=p.size - 1, error=MapContractViolation)


def residual(f: SelfMap, p) -> float:
    """``max_i |f(p)_i - p_i|``."""
    p = check_simplex_point(p)
    return float(np.max(np.abs(_image(f, p) - p)))


def _outcome(f: SelfMap, v, m: int, exact_tol: float) -> LabelOutcome:
    p = np.asarray(v, dtype=float) / m
    return _label(p, _image(f, p), exact_tol)


def _search(f, d, m, exact_tol, method, n_jobs) -> SmallSimplex:
    if method == "auto":
        method = "exhaustive" if m ** d <= EXHAUSTIVE_CELL_LIMIT else "path"

    if method == "path":
        def label_of(v):
            out = _outcome(f, v, m, exact_tol)
            if out.is_exact:
                raise _ExactHit(out.exact_hit)
            return out.label
        return walk(d, m, label_of)

    points = grid_points(d, m)
    if n_jobs and n_jobs > 1:
        with ThreadPoolExecutor(n_jobs) as pool:
            outcomes = list(pool.map(lambda v: _outcome(f, v, m, exact_tol), points))
    else:
        outcomes = [_outcome(f, v, m, exact_tol) for v in points]
    for out in outcomes:
        if out.is_exact:
            raise _ExactHit(out.exact_hit)
    labels = {v: out.label for v, out in zip(points, outcomes)}
    lt = LabeledTriangulation(d, m, tuple(triangulate(d, m)), labels)
    return enumerate_fully_labeled(lt)[0]


def approx_fixed_point(f: SelfMap, d: int, eps: float, m0: int = 4, max_refine: int = 20, *,
                       exact_tol: float = DEFAULT_EXACT_TOL, search: str = "auto",
                       n_jobs: int | None = None, warn: bool = True) -> FixedPointResult:
    """Find ``p`` with ``max |f(p) - p| < eps`` on the ``d``-simplex.

    Meshes ``m0, 2*m0, 4*m0, ...`` are labeled from ``f``; at each one the
    vertex labeled 0 of a fully labeled cell is the candidate.  A grid
    vertex with ``|f(p) - p| <= exact_tol`` ends the search at once.

    Parameters
    ----------
    f : callable
        Maps a point of the simplex (ndarray of shape (d + 1,)) to another.
    d : int
        Simplex dimension.
    eps : float
        Target residual.
    m0 : int
        Initial mesh.
    max_refine : int
        Number of mesh doublings allowed after ``m0``.
    exact_tol : float
        Threshold for treating a vertex as an exact fixed point.
    search : {"auto", "exhaustive", "path"}
        ``exhaustive`` labels every vertex and takes the first fully labeled
        cell in cell order; ``path`` walks in from the boundary and labels
        only what it visits; ``auto`` picks exhaustive for small meshes.
    n_jobs : int, optional
        Threads for exhaustive labeling.  ``f`` must then be thread-safe.
    warn : bool
        Emit ``ToleranceNotReachedWarning`` when the budget runs out.

    Returns
    -------
    FixedPointResult
        ``converged`` is False when the budget ran out; ``point`` is then
        the best candidate seen.
    """
    d = check_int(d, "d", 1)
    eps = check_positive_float(eps, "eps")
    m0 = check_int(m0, "m0", 1)
    max_refine = check_int(max_refine, "max_refine", 0)
    exact_tol = check_positive_float(exact_tol, "exact_tol")
    if search not in SEARCH_METHODS:
        raise InvalidArgumentError(f"search must be one of {SEARCH_METHODS}, got {search!r}")

    trace: list[tuple[int, np.ndarray, float]] = []
    best = None
    for level in range(max_refine + 1):
        m = m0 * 2 ** level
        try:
            cell = _search(f, d, m, exact_tol, search, n_jobs)
        except _ExactHit as hit:
            r = residual(f, hit.point)
            trace.append((m, hit.point, r))
            logger.debug("mesh %d: exact fixed point at %s", m, hit.point)
            return FixedPointResult(hit.point, r, level, m, True, True, trace)
        # the vertex labeled 0 carries the residual bound of the proof
        candidate = cell.vertices[0]
        for v in cell.vertices:
            if _outcome(f, v, m, exact_tol).label == 0:
                candidate = v
                break
        p = np.asarray(candidate, dtype=float) / m
        r = residual(f, p)
        trace.append((m, p, r))
        logger.debug("mesh %d: candidate %s residual %.3e", m, p, r)
        if best is None or r < best.residual:
            best = FixedPointResult(p, r, level, m, False, False, trace)
        if r < eps:
            return FixedPointResult(p, r, level, m, True, False, trace)

    if warn:
        warnings.warn(f"residual {best.residual:.3e} above eps={eps:g} after "
                      f"{max_refine} refinements", ToleranceNotReachedWarning, stacklevel=2)
    best.refinements_used = max_refine
    return best


def cauchy_diagnostic(trace) -> list[float]:
    """Sup-norm distances between successive candidates of a trace.

    Distances that fail to shrink are evidence that the map has no isolated
    fixed point near the candidates; nothing is raised.
    """
    if len(trace) < 2:
        raise InvalidArgumentError("trace needs at least two entries")
    points = [np.asarray(entry[1], dtype=float) for entry in trace]
    return [float(np.max(np.abs(b - a))) for a, b in zip(points, points[1:])]
