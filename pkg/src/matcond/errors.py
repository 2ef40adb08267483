"""Exception types shared across the package."""


class MatcondError(Exception):
    """Base class for all errors raised by this package."""


class ConvergenceError(MatcondError):
    """An iterative factorization or solver failed to converge."""


class SingularMatrixError(MatcondError):
    """A linear system or inversion met a (numerically) singular matrix."""


class DomainError(MatcondError):
    """The input lies outside the domain of the requested matrix function."""


class MatrixOverflowError(MatcondError):
    """Intermediate or final entries left the representable floating range."""


class MembershipError(MatcondError):
    """A matrix failed a structure membership test."""


class PatternError(MatcondError):
    """A quasi-triangularity pattern is malformed or violated."""
