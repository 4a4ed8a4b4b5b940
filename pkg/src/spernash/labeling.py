"""Sperner labels induced by a self-map of the simplex."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import InvalidArgumentError
from .validation import check_barycentric_point, check_positive_float, check_simplex_point

DEFAULT_EXACT_TOL = 1e-12


@dataclass(frozen=True)
class LabelOutcome:
    """Either an integer label or the vertex itself when it is a fixed point."""

    label: int | None = None
    exact_hit: np.ndarray | None = None

    @property
    def is_exact(self) -> bool:
        return self.exact_hit is not None


def label_vertex(p, fp, exact_tol: float = DEFAULT_EXACT_TOL) -> LabelOutcome:
    """Label ``p`` with a coordinate where ``p_k > f(p)_k``.

    The label is the largest gap ``p_k - f(p)_k``, smallest index on ties.
    When ``max |f(p) - p| <= exact_tol`` the vertex is reported as an exact
    fixed point instead.
    """
    p = check_simplex_point(p)
    fp = check_simplex_point(fp, dim=p.size - 1)
    exact_tol = check_positive_float(exact_tol, "exact_tol")
    return _label(p, fp, exact_tol)


def _label(p: np.ndarray, fp: np.ndarray, exact_tol: float) -> LabelOutcome:
    gap = p - fp
    if np.max(np.abs(gap)) <= exact_tol:
        return LabelOutcome(exact_hit=p)
    # A positive maximum gap can only sit where p_k > 0; restricting to the
    # support keeps the label admissible when rounding leaves all gaps <= 0.
    support = np.flatnonzero(p > 0)
    k = int(support[np.argmax(gap[support])])
    return LabelOutcome(label=k)


def check_admissible(p, label: int) -> bool:
    """True when ``label`` names a vertex of the smallest face containing ``p``."""
    coords = check_barycentric_point(p)
    if isinstance(label, bool) or not 0 <= label < len(coords):
        raise InvalidArgumentError(f"label {label!r} outside 0..{len(coords) - 1}")
    return coords[label] > 0
