"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument is outside the mathematical domain of the operation."""


class NoConvergenceError(RuntimeError):
    """An iterative computation hit its term budget before its stop rule."""


class BoundNotApplicableError(RuntimeError):
    """The truncation bound requires an alternating, monotonically decaying
    tail, and the inspected terms do not satisfy that."""


class QuadratureError(RuntimeError):
    """Panel refinement failed to reach the requested quadrature tolerance."""
