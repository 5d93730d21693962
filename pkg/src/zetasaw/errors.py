"""Exception hierarchy shared by every module."""


class ZetasawError(Exception):
    """Base class for all package errors."""


class DomainError(ZetasawError, ValueError):
    """Argument outside the domain of the operation."""


class PoleError(DomainError):
    """Evaluation requested at a pole of the function."""


class ConvergenceError(ZetasawError, ArithmeticError):
    """Iteration or series failed to converge within its budget."""


class PrecisionError(ZetasawError, ArithmeticError):
    """Guard digits are insufficient to decide a discrete quantity."""
