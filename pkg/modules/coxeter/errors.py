"""
Error types shared by every package of the Hecke toolkit.
All of them derive from ValueError so callers that only know the
standard library still catch them.
"""


class CoxeterError(ValueError):
    """Base class for invalid graphs, words and arguments."""


class UnknownGeneratorError(CoxeterError):
    pass


class GraphMismatchError(CoxeterError):
    pass


class NotACliqueError(CoxeterError):
    pass


class PreconditionError(CoxeterError):
    pass


class ResourceLimitError(CoxeterError):
    """Raised when an enumeration would exceed the configured ball cap."""


class ConvergenceError(CoxeterError):
    pass
