"""Exception hierarchy shared by the numerical modules."""


class TietzHuaError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(TietzHuaError, ValueError):
    """An argument lies outside the domain where the quantity is defined."""


class PoleError(DomainError):
    """A denominator parameter is zero or a negative integer."""


class SingularityError(DomainError):
    """The potential was evaluated at (or too close to) its singular radius."""


class ConvergenceError(TietzHuaError, ArithmeticError):
    """An iterative evaluation stopped before reaching its tolerance.

    ``partial`` holds the last available estimate so callers can report it.
    """

    def __init__(self, message, partial=None, terms=0):
        super().__init__(message)
        self.partial = partial
        self.terms = terms


class OracleError(TietzHuaError, RuntimeError):
    """The reference eigensolver could not bracket or converge a level."""
