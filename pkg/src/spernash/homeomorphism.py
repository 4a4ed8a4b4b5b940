"""Radial homeomorphism between the profile polytope and one simplex.

Both bodies live in "free coordinates": the last entry of every
probability vector is dropped.  A point ``center_P + s * u`` of the profile
polytope goes to ``center_S + s * (rho_S(u) / rho_P(u)) * u`` where ``rho``
is the distance to the boundary along ``u``; boundary goes to boundary
and centers go to centers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted

from .exceptions import InvalidArgumentError, InvalidBodyError
from .validation import check_profile, check_simplex_point

CENTER_GUARD = 1e-14


@dataclass(frozen=True)
class ConvexBody:
    """``{x : normals @ x <= offsets}`` with a strictly interior center."""

    normals: np.ndarray
    offsets: np.ndarray
    center: np.ndarray

    def __post_init__(self):
        slack = self.offsets - self.normals @ self.center
        object.__setattr__(self, "_center_slack", slack)
        if np.any(slack <= 0):
            raise InvalidBodyError("center does not strictly satisfy every constraint")

    @property
    def dim(self) -> int:
        return self.center.size

    def radial_scale(self, u) -> float:
        """Largest ``t >= 0`` with ``center + t * u`` inside the body."""
        u = np.asarray(u, dtype=float)
        if not np.any(u):
            raise InvalidArgumentError("direction must be nonzero")
        return self._rho(u)

    def _rho(self, u: np.ndarray) -> float:
        rate = self.normals @ u
        hit = rate > 0
        if not hit.any():
            raise InvalidBodyError(f"body is unbounded along {u}")
        return float((self._center_slack[hit] / rate[hit]).min())

    def slack(self, x) -> np.ndarray:
        return self.offsets - self.normals @ np.asarray(x, dtype=float)

    def check_bounded(self, n_directions: int = 256, seed=0) -> None:
        rng = np.random.default_rng(seed)
        directions = np.vstack([np.eye(self.dim), -np.eye(self.dim),
                                rng.standard_normal((n_directions, self.dim))])
        for u in directions:
            self.radial_scale(u)


def _simplex_block(k: int) -> tuple[np.ndarray, np.ndarray]:
    # x >= 0 and sum(x) <= 1 in k free coordinates
    normals = np.vstack([-np.eye(k), np.ones((1, k))])
    offsets = np.concatenate([np.zeros(k), [1.0]])
    return normals, offsets


def simplex_body(d: int) -> ConvexBody:
    normals, offsets = _simplex_block(d)
    return ConvexBody(normals, offsets, np.full(d, 1.0 / (d + 1)))


def profile_body(strategy_counts: Sequence[int]) -> ConvexBody:
    dims = [m - 1 for m in strategy_counts]
    d = sum(dims)
    normals, offsets, center = [], [], []
    col = 0
    for m, k in zip(strategy_counts, dims):
        block_n, block_o = _simplex_block(k)
        full = np.zeros((block_n.shape[0], d))
        full[:, col:col + k] = block_n
        normals.append(full)
        offsets.append(block_o)
        center.append(np.full(k, 1.0 / m))
        col += k
    return ConvexBody(np.vstack(normals), np.concatenate(offsets), np.concatenate(center))


def _radial(x, source: ConvexBody, target: ConvexBody) -> np.ndarray | None:
    """Image of ``x``, or None at the source center where no direction exists."""
    u = x - source.center
    if np.abs(u).max() <= CENTER_GUARD:
        return None
    return target.center + u * (target._rho(u) / source._rho(u))


def _complete(free: np.ndarray) -> np.ndarray:
    # clamp rounding debris so the completed vector is a probability vector
    out = np.empty(free.size + 1)
    np.clip(free, 0.0, 1.0, out=out[:-1])
    total = out[:-1].sum()
    if total > 1.0:
        out[:-1] /= total
        total = 1.0
    out[-1] = 1.0 - total
    return out


class RadialHomeomorphism(TransformerMixin, BaseEstimator):
    """Map flattened mixed profiles onto the standard simplex and back.

    Parameters
    ----------
    strategy_counts : tuple of int
        Number of pure strategies of each player.

    Attributes
    ----------
    dim_ : int
        Simplex dimension ``sum(m_i - 1)``.
    profile_body_, simplex_body_ : ConvexBody
    """

    def __init__(self, strategy_counts=(2, 2)):
        self.strategy_counts = strategy_counts

    def fit(self, X=None, y=None):
        counts = tuple(int(m) for m in self.strategy_counts)
        if len(counts) < 1 or min(counts) < 2:
            raise InvalidArgumentError(f"invalid strategy counts {self.strategy_counts!r}")
        self.counts_ = counts
        self.dim_ = sum(m - 1 for m in counts)
        self.profile_body_ = profile_body(counts)
        self.simplex_body_ = simplex_body(self.dim_)
        self.n_features_in_ = sum(counts)
        return self

    def _split(self, flat):
        return np.split(flat, np.cumsum(self.counts_)[:-1])

    def profile_to_simplex(self, profile) -> np.ndarray:
        check_is_fitted(self)
        return self._to_simplex(check_profile(profile, self.counts_))

    def _to_simplex(self, rows) -> np.ndarray:
        y = _radial(np.concatenate([row[:-1] for row in rows]),
                    self.profile_body_, self.simplex_body_)
        if y is None:
            return np.full(self.dim_ + 1, 1.0 / (self.dim_ + 1))
        return _complete(y)

    def simplex_to_profile(self, q) -> list[np.ndarray]:
        check_is_fitted(self)
        return self._to_profile(check_simplex_point(q, self.dim_))

    def _to_profile(self, q: np.ndarray) -> list[np.ndarray]:
        x = _radial(q[:-1], self.simplex_body_, self.profile_body_)
        if x is None:
            return [np.full(m, 1.0 / m) for m in self.counts_]
        out, col = [], 0
        for m in self.counts_:
            out.append(_complete(x[col:col + m - 1]))
            col += m - 1
        return out

    def transform(self, X):
        """Rows of ``X`` are flattened profiles; returns simplex points."""
        check_is_fitted(self)
        X = check_array(X, ensure_min_features=self.n_features_in_)
        return np.vstack([self.profile_to_simplex(self._split(row)) for row in X])

    def inverse_transform(self, X):
        check_is_fitted(self)
        X = check_array(X)
        return np.vstack([np.concatenate(self.simplex_to_profile(row)) for row in X])


@lru_cache(maxsize=32)
def _fitted(counts: tuple[int, ...]) -> RadialHomeomorphism:
    return RadialHomeomorphism(counts).fit()


def to_simplex(profile) -> np.ndarray:
    """Image of a mixed profile on the ``sum(m_i - 1)``-simplex."""
    rows = [np.asarray(r, dtype=float) for r in profile]
    return _fitted(tuple(r.size for r in rows)).profile_to_simplex(rows)


def from_simplex(q, strategy_counts: Sequence[int]) -> list[np.ndarray]:
    return _fitted(tuple(int(m) for m in strategy_counts)).simplex_to_profile(q)
