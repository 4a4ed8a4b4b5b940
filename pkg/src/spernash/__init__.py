"""Simplicial fixed points by Sperner labeling, and Nash equilibria through them."""

from .estimators import SimplicialFixedPoint, SpernerNashSolver
from .fixed_point import FixedPointResult, approx_fixed_point, cauchy_diagnostic, residual
from .game import Game, deviation_payoffs, expected_payoff, pure_deviation_payoff, psi, regret
from .grid import SmallSimplex, embed, grid_points, triangulate
from .homeomorphism import ConvexBody, RadialHomeomorphism, from_simplex, to_simplex
from .labeling import LabelOutcome, check_admissible, label_vertex
from .solver import EquilibriumResult, oracle_2x2, solve
from .sperner import (
    LabeledTriangulation,
    UndirectedGraph,
    dual_graph,
    enumerate_fully_labeled,
    handshake_check,
    path_follow,
    random_admissible_labeling,
)

__version__ = "0.1.0"

__all__ = [
    "ConvexBody",
    "EquilibriumResult",
    "FixedPointResult",
    "Game",
    "LabelOutcome",
    "LabeledTriangulation",
    "RadialHomeomorphism",
    "SimplicialFixedPoint",
    "SmallSimplex",
    "SpernerNashSolver",
    "UndirectedGraph",
    "approx_fixed_point",
    "cauchy_diagnostic",
    "check_admissible",
    "deviation_payoffs",
    "dual_graph",
    "embed",
    "enumerate_fully_labeled",
    "expected_payoff",
    "from_simplex",
    "grid_points",
    "handshake_check",
    "label_vertex",
    "oracle_2x2",
    "path_follow",
    "psi",
    "pure_deviation_payoff",
    "random_admissible_labeling",
    "regret",
    "residual",
    "solve",
    "to_simplex",
    "triangulate",
]
