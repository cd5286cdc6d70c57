"""Exception types raised across the package."""


class DegenerateDimension(ValueError):
    """N < 3: the cyclic tridiagonal structure collapses."""


class OrderMismatch(ValueError):
    """Operands live in cyclotomic fields of different order."""


class DivisionByZero(ZeroDivisionError):
    pass


class UnsupportedNormalization(ValueError):
    """The exact backend cannot hold N^{-1/2}."""


class NotHermitian(ValueError):
    pass


class InternalError(RuntimeError):
    """A computed fact contradicts an established one."""
