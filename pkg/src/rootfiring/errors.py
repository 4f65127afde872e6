"""Exception types raised across the package."""


class RootFiringError(Exception):
    """Base class for all errors raised by :mod:`rootfiring`."""


class InvalidType(RootFiringError, ValueError):
    """Unknown family or inadmissible (family, rank) pair."""


class NotDominant(RootFiringError, ValueError):
    pass


class DifferentCoset(RootFiringError, ValueError):
    """Two weights were combined that do not differ by an element of Q."""


class DependentSet(RootFiringError, ValueError):
    pass


class DimensionError(RootFiringError, ValueError):
    pass


class BadParam(RootFiringError, ValueError):
    """Deformation parameter is negative or not good."""


class ResourceLimit(RootFiringError):
    """A computation would exceed a configured size bound.

    ``estimate`` holds the estimated work (number of subsets, box points, ...)
    and ``limit`` the bound that rejected it.
    """

    def __init__(self, message, estimate=None, limit=None):
        super().__init__(message)
        self.estimate = estimate
        self.limit = limit


class NonPolynomialFit(RootFiringError):
    """Sampled counts are not fitted by an integer polynomial of the expected degree.

    For truncated firing in non-simply-laced types this is an experimental
    outcome rather than a bug, so callers usually catch it and report it.
    """

    def __init__(self, message, samples=None):
        super().__init__(message)
        self.samples = samples


class InvariantViolation(RootFiringError, RuntimeError):
    """An internal consistency check failed; always indicates a bug."""


class NonTermination(InvariantViolation):
    pass


class StepLimit(InvariantViolation):
    pass


class UnmatchedStablePoint(InvariantViolation):
    pass
