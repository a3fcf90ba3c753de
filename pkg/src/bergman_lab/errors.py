"""Exception types shared across the package."""


class BergmanLabError(Exception):
    """Base class for all errors raised by bergman_lab."""


class DomainError(BergmanLabError):
    """Input outside its mathematical domain (e.g. a point not in the open disc)."""


class PrecisionError(BergmanLabError):
    """A quadrature rule failed its refinement acceptance test."""


class EvaluationError(BergmanLabError):
    """An integrand evaluated to a non-finite value at a quadrature node."""


class DegeneracyError(BergmanLabError):
    """A matrix became numerically singular or lost positive semidefiniteness."""
