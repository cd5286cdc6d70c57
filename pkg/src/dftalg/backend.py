"""Scalar backends: exact elements of Q(zeta_M) or double-precision complex numbers.

Both expose the same handful of constants (powers of q and of p = q^{1/2},
the imaginary unit, s_n, c_n) and matrix factories, so operator
constructors and relation checks are written once.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction

from .cyclo import CycloScalar, field_order_for, get_field
from .errors import DegenerateDimension
from .matrix import ExactMatrix, FloatMatrix

__all__ = ["ExactBackend", "FloatBackend", "get_backend"]


class ExactBackend:
    name = "exact"

    def __init__(self, N: int):
        self.N = N
        self.order = field_order_for(N)
        self.field = get_field(self.order)

    def __repr__(self) -> str:
        return f"ExactBackend(N={self.N}, M={self.order})"

    def zeta(self, k: int) -> CycloScalar:
        return CycloScalar.zeta(self.order, k % self.order)

    def q(self, k: int = 1) -> CycloScalar:
        return self.zeta(k * (self.order // self.N))

    def p(self, k: int = 1) -> CycloScalar:
        """p^k with p = q^{1/2} = exp(i pi / N)."""
        return self.zeta(k * (self.order // (2 * self.N)))

    @property
    def i(self) -> CycloScalar:
        return self.zeta(self.order // 4)

    def scalar(self, value) -> CycloScalar:
        if isinstance(value, CycloScalar):
            if value.order == self.order:
                return value
            return value.lift(self.order)
        if isinstance(value, complex):
            raise TypeError("exact backend cannot take a float complex value")
        return CycloScalar.from_rational(self.order, Fraction(value))

    def s(self, n: int) -> CycloScalar:
        return (self.q(n) - self.q(-n)) * self.i * Fraction(-1, 2)

    def c(self, n: int) -> CycloScalar:
        return (self.q(n) + self.q(-n)) * Fraction(1, 2)

    def matrix(self, entries) -> ExactMatrix:
        return ExactMatrix.from_entries(
            self.field, self.N, {k: self.scalar(v) for k, v in entries.items()}
        )

    def zeros(self) -> ExactMatrix:
        return ExactMatrix.zeros(self.field, self.N)

    def identity(self) -> ExactMatrix:
        return ExactMatrix.identity(self.field, self.N)

    @staticmethod
    def is_zero(value) -> bool:
        return value.is_zero()

    @staticmethod
    def to_complex(value) -> complex:
        return complex(value)


class FloatBackend:
    name = "float"

    def __init__(self, N: int):
        if N < 3:
            raise DegenerateDimension(f"N must be >= 3, got {N}")
        self.N = N

    def __repr__(self) -> str:
        return f"FloatBackend(N={self.N})"

    def q(self, k: int = 1) -> complex:
        return cmath.exp(2j * math.pi * (k % self.N) / self.N)

    def p(self, k: int = 1) -> complex:
        return cmath.exp(1j * math.pi * (k % (2 * self.N)) / self.N)

    @property
    def i(self) -> complex:
        return 1j

    def scalar(self, value) -> complex:
        return complex(value)

    def s(self, n: int) -> complex:
        return complex(math.sin(2 * math.pi * n / self.N))

    def c(self, n: int) -> complex:
        return complex(math.cos(2 * math.pi * n / self.N))

    def matrix(self, entries) -> FloatMatrix:
        return FloatMatrix.from_entries(self.N, entries)

    def zeros(self) -> FloatMatrix:
        return FloatMatrix.zeros(self.N)

    def identity(self) -> FloatMatrix:
        return FloatMatrix.identity(self.N)

    @staticmethod
    def is_zero(value, tol: float = 1e-12) -> bool:
        return abs(value) <= tol

    @staticmethod
    def to_complex(value) -> complex:
        return complex(value)


def get_backend(N: int, backend="exact"):
    """Resolve ``"exact"``, ``"float"`` or an existing backend instance for dimension N."""
    if isinstance(backend, (ExactBackend, FloatBackend)):
        if backend.N != N:
            raise ValueError(f"backend built for N={backend.N}, asked for N={N}")
        return backend
    if backend == "exact":
        return _exact_cached(N)
    if backend == "float":
        return FloatBackend(N)
    raise ValueError(f"unknown backend {backend!r}")


_EXACT: dict[int, ExactBackend] = {}


def _exact_cached(N: int) -> ExactBackend:
    bk = _EXACT.get(N)
    if bk is None:
        bk = _EXACT[N] = ExactBackend(N)
    return bk
