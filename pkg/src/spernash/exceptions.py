"""Exception and warning classes used across the package."""


class InvalidArgumentError(ValueError):
    """A dimension, mesh, index or tolerance is out of range."""


class InconsistentInputError(ValueError):
    """A labeled triangulation is missing labels or carries foreign vertices."""


class InconsistentLabelingError(RuntimeError):
    """A pivoting walk met a labeling that breaks the boundary rules."""


class MapContractViolation(ValueError):
    """A self-map of the simplex returned a point outside the simplex."""


class InvalidBodyError(ValueError):
    """A convex body is unbounded or its center is not interior."""


class DegenerateGameError(NotImplementedError):
    """The 2x2 oracle met a continuum of equilibria it does not enumerate."""


class GameFileError(ValueError):
    """A game file could not be parsed."""


class ShapeMismatchError(GameFileError):
    pass


class NonFinitePayoffError(GameFileError):
    pass


class ToleranceNotReachedWarning(UserWarning):
    """Refinement budget exhausted before the requested tolerance.

    The returned result still carries the best candidate found.
    """
