"""Equilibria of finite games as approximate fixed points of the improvement map."""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .exceptions import DegenerateGameError, InvalidArgumentError, ToleranceNotReachedWarning
from .fixed_point import approx_fixed_point, cauchy_diagnostic
from .game import Game, _psi, psi_residual, regret
from .homeomorphism import RadialHomeomorphism
from .labeling import DEFAULT_EXACT_TOL
from .validation import check_int, check_positive_float

logger = logging.getLogger(__name__)

SOLVED = "solved"
NOT_REACHED = "tolerance-not-reached"
# halving the inner target more often than this cannot help in float64
MAX_RETRIES = 60


@dataclass
class EquilibriumResult:
    profile: list[np.ndarray]
    regrets: np.ndarray
    psi_residual: float
    status: str
    mesh: int
    refinements_used: int
    trace: list[tuple[int, np.ndarray, float]] = field(default_factory=list)
    cauchy: list[float] = field(default_factory=list)

    @property
    def max_regret(self) -> float:
        return float(np.max(self.regrets))


def improvement_map(g: Game):
    """The improvement map pulled back to the ``g.dim``-simplex."""
    h = RadialHomeomorphism(g.strategy_counts).fit()

    def f(q):
        # f is only ever called on validated simplex points
        return h._to_simplex(_psi(g, h._to_profile(q)))

    return f, h


def solve(g: Game, eps: float = 1e-4, m0: int = 4, max_refine: int = 20, *,
          search: str = "auto", exact_tol: float = DEFAULT_EXACT_TOL,
          n_jobs: int | None = None) -> EquilibriumResult:
    """Profile whose largest regret is below ``eps``.

    The fixed-point engine controls the residual of the pulled-back map,
    not the regret, so the inner residual target starts at ``eps`` and is
    halved until the recovered profile's regret drops below ``eps``.  All
    attempts share one budget of ``max_refine`` mesh doublings.
    """
    eps = check_positive_float(eps, "eps")
    m0 = check_int(m0, "m0", 1)
    max_refine = check_int(max_refine, "max_refine", 0)
    f, h = improvement_map(g)

    inner = eps
    mesh, used = m0, 0
    trace: list = []
    for _ in range(MAX_RETRIES):
        res = approx_fixed_point(f, h.dim_, inner, mesh, max_refine - used,
                                 exact_tol=exact_tol, search=search, n_jobs=n_jobs, warn=False)
        trace.extend(res.candidate_trace)
        used += res.refinements_used
        mesh = m0 * 2 ** used
        profile = h.simplex_to_profile(res.point)
        regrets = regret(g, profile)
        logger.debug("mesh %d inner eps %.3e: max regret %.3e", mesh, inner, regrets.max())
        if regrets.max() < eps:
            status = SOLVED
            break
        if not res.converged or res.exact_hit or used >= max_refine:
            status = NOT_REACHED
            break
        inner /= 2
    else:
        status = NOT_REACHED

    if status == NOT_REACHED:
        warnings.warn(f"max regret {regrets.max():.3e} above eps={eps:g}",
                      ToleranceNotReachedWarning, stacklevel=2)
    return EquilibriumResult(
        profile=profile,
        regrets=regrets,
        psi_residual=psi_residual(g, profile),
        status=status,
        mesh=mesh,
        refinements_used=used,
        trace=trace,
        cauchy=cauchy_diagnostic(trace) if len(trace) > 1 else [],
    )


def oracle_2x2(g: Game, tol: float = 1e-12) -> list[list[np.ndarray]]:
    """All equilibria of a 2x2 game by support enumeration.

    Pure profiles are checked directly; the fully mixed candidate comes
    from the two indifference conditions.
    """
    if g.strategy_counts != (2, 2):
        raise InvalidArgumentError(f"oracle_2x2 needs a 2x2 game, got {g.strategy_counts}")
    a, b = g.payoffs[..., 0], g.payoffs[..., 1]
    found = []
    for s in product(range(2), range(2)):
        prof = g.pure_profile(s)
        if regret(g, prof).max() <= tol:
            found.append(prof)

    # column player indifferent fixes the row mix, and vice versa
    p = _indifference(b[1, 1] - b[1, 0], b[0, 0] - b[1, 0] - b[0, 1] + b[1, 1])
    q = _indifference(a[1, 1] - a[0, 1], a[0, 0] - a[0, 1] - a[1, 0] + a[1, 1])
    if p is not None and q is not None and 0 <= p <= 1 and 0 <= q <= 1:
        prof = [np.array([p, 1 - p]), np.array([q, 1 - q])]
        fresh = all(max(np.max(np.abs(x - y)) for x, y in zip(prof, other)) > tol
                    for other in found)
        if fresh and regret(g, prof).max() <= tol:
            found.append(prof)
    return found


def _indifference(num: float, den: float) -> float | None:
    if den == 0:
        if num == 0:
            raise DegenerateGameError(
                "a player is indifferent against every opponent mix; "
                "the continuum of equilibria is not supported")
        return None
    return num / den
