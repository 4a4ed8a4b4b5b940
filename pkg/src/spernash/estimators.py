"""Estimator-style front ends with ``get_params``/``set_params``.

These wrap :func:`spernash.fixed_point.approx_fixed_point` and
:func:`spernash.solver.solve` so solver settings can be cloned, grid
searched or stored like any other scikit-learn estimator.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .exceptions import InvalidArgumentError
from .fixed_point import approx_fixed_point, cauchy_diagnostic
from .game import Game, regret
from .labeling import DEFAULT_EXACT_TOL
from .solver import SOLVED, solve


class SimplicialFixedPoint(BaseEstimator):
    """Approximate fixed point of a self-map of the simplex.

    Parameters
    ----------
    epsilon : float, default=1e-6
        Target sup-norm residual.
    mesh : int, default=4
        Initial mesh.
    max_refine : int, default=20
        Mesh doublings allowed.
    search : {"auto", "exhaustive", "path"}, default="auto"
    exact_tol : float, default=1e-12

    Attributes
    ----------
    point_ : ndarray of shape (d + 1,)
    residual_ : float
    converged_ : bool
    result_ : FixedPointResult
    """

    def __init__(self, epsilon=1e-6, mesh=4, max_refine=20, search="auto",
                 exact_tol=DEFAULT_EXACT_TOL):
        self.epsilon = epsilon
        self.mesh = mesh
        self.max_refine = max_refine
        self.search = search
        self.exact_tol = exact_tol

    def fit(self, f, dim):
        res = approx_fixed_point(f, dim, self.epsilon, self.mesh, self.max_refine,
                                 exact_tol=self.exact_tol, search=self.search)
        self.result_ = res
        self.point_ = res.point
        self.residual_ = res.residual
        self.converged_ = res.converged
        return self

    def cauchy_distances(self) -> list[float]:
        check_is_fitted(self)
        trace = self.result_.candidate_trace
        return cauchy_diagnostic(trace) if len(trace) > 1 else []


class SpernerNashSolver(BaseEstimator):
    """Approximate Nash equilibrium of a finite game.

    ``fit`` takes a :class:`~spernash.game.Game`; ``score`` returns the
    negated largest regret of the fitted profile in another game of the
    same shape (0 is a perfect equilibrium).
    """

    def __init__(self, epsilon=1e-4, mesh=4, max_refine=20, search="auto",
                 exact_tol=DEFAULT_EXACT_TOL, n_jobs=None):
        self.epsilon = epsilon
        self.mesh = mesh
        self.max_refine = max_refine
        self.search = search
        self.exact_tol = exact_tol
        self.n_jobs = n_jobs

    def fit(self, game, y=None):
        if not isinstance(game, Game):
            game = Game(game)
        res = solve(game, self.epsilon, self.mesh, self.max_refine, search=self.search,
                    exact_tol=self.exact_tol, n_jobs=self.n_jobs)
        self.result_ = res
        self.profile_ = res.profile
        self.regrets_ = res.regrets
        self.psi_residual_ = res.psi_residual
        self.converged_ = res.status == SOLVED
        self.strategy_counts_ = game.strategy_counts
        return self

    def score(self, game, y=None) -> float:
        check_is_fitted(self)
        if not isinstance(game, Game):
            game = Game(game)
        if game.strategy_counts != self.strategy_counts_:
            raise InvalidArgumentError("game shape differs from the fitted one")
        return -float(np.max(regret(game, self.profile_)))
