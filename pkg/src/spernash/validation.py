"""Input validation helpers, in the spirit of ``sklearn.utils.validation``."""

from __future__ import annotations

import numbers
from typing import Sequence

import numpy as np

from .exceptions import InvalidArgumentError

SUM_TOL = 1e-12


def check_int(value, name: str, minimum: int = 0) -> int:
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise InvalidArgumentError(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise InvalidArgumentError(f"{name} must be >= {minimum}, got {value}")
    return int(value)


def check_positive_float(value, name: str) -> float:
    value = float(value)
    if not np.isfinite(value) or value <= 0:
        raise InvalidArgumentError(f"{name} must be a finite positive number, got {value!r}")
    return value


def check_barycentric_point(coords, mesh: int | None = None) -> tuple[int, ...]:
    """Return ``coords`` as a tuple of nonnegative ints, checking the sum."""
    out = tuple(int(c) for c in coords)
    if any(c != orig for c, orig in zip(out, coords)):
        raise InvalidArgumentError(f"barycentric coordinates must be integers: {coords!r}")
    if not out or min(out) < 0:
        raise InvalidArgumentError(f"barycentric coordinates must be nonnegative: {coords!r}")
    total = sum(out)
    if total < 1:
        raise InvalidArgumentError("barycentric coordinates must sum to a positive mesh")
    if mesh is not None and total != mesh:
        raise InvalidArgumentError(f"coordinates {out} sum to {total}, expected mesh {mesh}")
    return out


def check_simplex_point(p, dim: int | None = None, tol: float = SUM_TOL,
                        error=InvalidArgumentError) -> np.ndarray:
    """Validate a point of the probability simplex.

    Parameters
    ----------
    p : array-like of shape (d + 1,)
    dim : int, optional
        Expected simplex dimension ``d``.
    tol : float
        Allowed deviation of the coordinate sum from 1.
    error : type
        Exception class raised on failure.

    Returns
    -------
    ndarray of float64
    """
    arr = np.asarray(p, dtype=float)
    if arr.ndim != 1 or arr.size == 0:
        raise error(f"simplex point must be a non-empty vector, got shape {arr.shape}")
    if dim is not None and arr.size != dim + 1:
        raise error(f"expected {dim + 1} coordinates, got {arr.size}")
    if not np.all(np.isfinite(arr)):
        raise error("simplex point has non-finite coordinates")
    if arr.min() < 0:
        raise error(f"simplex point has a negative coordinate {arr.min()!r}")
    if abs(arr.sum() - 1.0) > tol:
        raise error(f"simplex point sums to {arr.sum()!r}, not 1")
    return arr


def check_profile(profile, strategy_counts: Sequence[int] | None = None,
                  tol: float = SUM_TOL) -> list[np.ndarray]:
    """Validate a mixed profile: one probability row per player."""
    rows = [np.asarray(row, dtype=float) for row in profile]
    if strategy_counts is not None:
        if len(rows) != len(strategy_counts):
            raise InvalidArgumentError(
                f"profile has {len(rows)} rows, game has {len(strategy_counts)} players")
        for i, (row, m) in enumerate(zip(rows, strategy_counts)):
            if row.shape != (m,):
                raise InvalidArgumentError(
                    f"row {i} has shape {row.shape}, expected ({m},)")
    for i, row in enumerate(rows):
        if row.ndim != 1 or not np.all(np.isfinite(row)) or row.min() < 0:
            raise InvalidArgumentError(f"row {i} is not a nonnegative finite vector")
        if abs(row.sum() - 1.0) > tol:
            raise InvalidArgumentError(f"row {i} sums to {row.sum()!r}, not 1")
    return rows
