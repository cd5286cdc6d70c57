"""Dense square matrices over the exact cyclotomic or the floating complex backend.

Exact matrices store an (n, n, d) tensor of integer numerators with one
common positive denominator; entry (i, j) is the field element whose
power-basis coefficients are ``num[i, j, :] / den``.
"""
from __future__ import annotations

import math
from abc import ABC, abstractmethod
from fractions import Fraction
from numbers import Complex, Rational

import numpy as np

from . import _kernels
from .cyclo import CycloField, CycloScalar
from .errors import OrderMismatch

__all__ = ["SquareMatrix", "ExactMatrix", "FloatMatrix", "commutator", "anticommutator"]


class SquareMatrix(ABC):
    """Common surface of both backends; all instances are treated as immutable."""

    backend: str
    n: int

    @abstractmethod
    def __matmul__(self, other): ...

    @abstractmethod
    def __add__(self, other): ...

    @abstractmethod
    def __neg__(self): ...

    @abstractmethod
    def __mul__(self, scalar): ...

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar):
        return self * scalar

    def __truediv__(self, scalar):
        if isinstance(scalar, CycloScalar):
            return self * scalar.inv()
        if isinstance(scalar, (int, Rational)):
            return self * (1 / Fraction(scalar))
        return self * (1 / scalar)

    def __pow__(self, k: int):
        if k < 1:
            raise ValueError("only positive powers are supported")
        result = self
        for _ in range(k - 1):
            result = result @ self
        return result

    @property
    @abstractmethod
    def T(self): ...

    @abstractmethod
    def conj(self): ...

    @property
    def H(self):
        return self.conj().T

    @abstractmethod
    def is_zero(self, tol: float = 0.0) -> bool: ...

    @abstractmethod
    def to_float(self) -> "FloatMatrix": ...

    @abstractmethod
    def entry(self, i: int, j: int): ...

    @abstractmethod
    def trace(self): ...

    def __getitem__(self, idx):
        i, j = idx
        return self.entry(i, j)

    def inf_norm(self) -> float:
        """Largest entry modulus (of the float image for exact matrices)."""
        return float(np.abs(self.to_float().data).max()) if self.n else 0.0

    def to_numpy(self) -> np.ndarray:
        return self.to_float().data

    @abstractmethod
    def to_json(self) -> dict: ...


class ExactMatrix(SquareMatrix):
    backend = "exact"
    __slots__ = ("field", "num", "den", "n")

    def __init__(self, field: CycloField, num: np.ndarray, den: int = 1, *, normalize: bool = True):
        num = np.asarray(num, dtype=object)
        if num.ndim != 3 or num.shape[0] != num.shape[1] or num.shape[2] != field.degree:
            raise ValueError(f"bad coefficient tensor shape {num.shape} for {field}")
        if den <= 0:
            raise ValueError("denominator must be positive")
        if normalize:
            g = math.gcd(den, *num.ravel().tolist())
            if g > 1:
                num = num // g
                den //= g
        self.field = field
        self.num = num
        self.den = den
        self.n = num.shape[0]

    # -- construction --------------------------------------------------------
    @classmethod
    def zeros(cls, field: CycloField, n: int) -> "ExactMatrix":
        return cls(field, _zeros_obj(n, field.degree), 1, normalize=False)

    @classmethod
    def identity(cls, field: CycloField, n: int) -> "ExactMatrix":
        num = _zeros_obj(n, field.degree)
        for k in range(n):
            num[k, k, 0] = 1
        return cls(field, num, 1, normalize=False)

    @classmethod
    def from_entries(cls, field: CycloField, n: int, entries) -> "ExactMatrix":
        """Build from a mapping ``{(i, j): scalar}``; repeated keys are not allowed."""
        items = []
        den = 1
        for (i, j), v in entries.items():
            v = _as_scalar(field, v)
            items.append((i, j, v))
            den = math.lcm(den, v.denominator)
        num = _zeros_obj(n, field.degree)
        for i, j, v in items:
            scale = den // v.denominator
            num[i, j, :] = [c * scale for c in v.numerators]
        return cls(field, num, den)

    @classmethod
    def from_rows(cls, field: CycloField, rows) -> "ExactMatrix":
        n = len(rows)
        return cls.from_entries(field, n, {(i, j): rows[i][j] for i in range(n) for j in range(n)})

    # -- arithmetic ----------------------------------------------------------
    def _check(self, other: "ExactMatrix"):
        if not isinstance(other, ExactMatrix):
            raise TypeError(f"cannot combine ExactMatrix with {type(other).__name__}")
        if other.field is not self.field:
            raise OrderMismatch(f"orders {self.field.order} and {other.field.order} differ")
        if other.n != self.n:
            raise ValueError(f"dimension mismatch {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        self._check(other)
        den = math.lcm(self.den, other.den)
        num = self.num * (den // self.den) + other.num * (den // other.den)
        return ExactMatrix(self.field, num, den)

    def __neg__(self):
        return ExactMatrix(self.field, -self.num, self.den, normalize=False)

    def __matmul__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        self._check(other)
        num = _kernels.cyclo_matmul(self.num, other.num, self.field.reduction)
        return ExactMatrix(self.field, num, self.den * other.den)

    def __mul__(self, scalar):
        if isinstance(scalar, SquareMatrix):
            return NotImplemented
        if isinstance(scalar, (int, Rational)) and not isinstance(scalar, bool):
            fr = Fraction(scalar)
            return ExactMatrix(self.field, self.num * fr.numerator, self.den * fr.denominator)
        if isinstance(scalar, CycloScalar):
            if scalar.field is not self.field:
                raise OrderMismatch(f"orders {self.field.order} and {scalar.order} differ")
            table = self.field.multiplication_matrix(scalar.numerators)
            num = np.tensordot(self.num, table, axes=([2], [0]))
            return ExactMatrix(self.field, num, self.den * scalar.denominator)
        return NotImplemented

    @property
    def T(self):
        return ExactMatrix(self.field, self.num.transpose(1, 0, 2).copy(), self.den, normalize=False)

    def conj(self):
        num = np.tensordot(self.num, self.field.conj_table, axes=([2], [0]))
        return ExactMatrix(self.field, num, self.den, normalize=False)

    # -- queries -------------------------------------------------------------
    def is_zero(self, tol: float = 0.0) -> bool:
        return not self.num.any()

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix) or other.field is not self.field or other.n != self.n:
            return False
        return self.den == other.den and bool((self.num == other.num).all())

    __hash__ = None

    def entry(self, i: int, j: int) -> CycloScalar:
        return CycloScalar._raw(self.field, [int(c) for c in self.num[i, j]], self.den)

    def trace(self) -> CycloScalar:
        total = [sum(int(self.num[k, k, s]) for k in range(self.n)) for s in range(self.field.degree)]
        return CycloScalar._raw(self.field, total, self.den)

    def is_diagonal(self) -> bool:
        off = self.num.copy()
        for k in range(self.n):
            off[k, k, :] = 0
        return not off.any()

    def to_float(self) -> "FloatMatrix":
        vals = self.field.basis_values
        data = np.tensordot(self.num.astype(float), vals, axes=([2], [0])) / self.den
        return FloatMatrix(data)

    def rows(self) -> list[list[CycloScalar]]:
        return [[self.entry(i, j) for j in range(self.n)] for i in range(self.n)]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "backend": "exact",
            "entries": [[self.entry(i, j).to_json() for j in range(self.n)] for i in range(self.n)],
        }

    def __repr__(self) -> str:
        return f"ExactMatrix(n={self.n}, order={self.field.order}, den={self.den})"


class FloatMatrix(SquareMatrix):
    backend = "float"
    __slots__ = ("data", "n")

    def __init__(self, data):
        data = np.array(data, dtype=complex)
        if data.ndim != 2 or data.shape[0] != data.shape[1]:
            raise ValueError(f"not a square matrix: shape {data.shape}")
        if not np.isfinite(data).all():
            raise ValueError("matrix has non-finite entries")
        self.data = data
        self.n = data.shape[0]

    @classmethod
    def zeros(cls, n: int) -> "FloatMatrix":
        return cls(np.zeros((n, n), dtype=complex))

    @classmethod
    def identity(cls, n: int) -> "FloatMatrix":
        return cls(np.eye(n, dtype=complex))

    @classmethod
    def from_entries(cls, n: int, entries) -> "FloatMatrix":
        data = np.zeros((n, n), dtype=complex)
        for (i, j), v in entries.items():
            data[i, j] = complex(v)
        return cls(data)

    def _other(self, other) -> np.ndarray:
        if isinstance(other, FloatMatrix):
            return other.data
        if isinstance(other, ExactMatrix):
            raise TypeError("cannot combine FloatMatrix with ExactMatrix; call to_float() first")
        raise TypeError(type(other).__name__)

    def __add__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return FloatMatrix(self.data + self._other(other))

    def __neg__(self):
        return FloatMatrix(-self.data)

    def __matmul__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return FloatMatrix(self.data @ self._other(other))

    def __mul__(self, scalar):
        if isinstance(scalar, SquareMatrix):
            return NotImplemented
        if isinstance(scalar, (Complex, CycloScalar)):
            return FloatMatrix(self.data * complex(scalar))
        return NotImplemented

    @property
    def T(self):
        return FloatMatrix(self.data.T)

    def conj(self):
        return FloatMatrix(self.data.conj())

    def is_zero(self, tol: float = 0.0) -> bool:
        return self.inf_norm() <= tol

    def entry(self, i: int, j: int) -> complex:
        return complex(self.data[i, j])

    def trace(self) -> complex:
        return complex(np.trace(self.data))

    def to_float(self) -> "FloatMatrix":
        return self

    def inf_norm(self) -> float:
        return float(np.abs(self.data).max()) if self.n else 0.0

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "backend": "float",
            "entries": [
                [{"re": float(z.real), "im": float(z.imag)} for z in row] for row in self.data
            ],
        }

    def __repr__(self) -> str:
        return f"FloatMatrix(n={self.n})"


def _zeros_obj(n: int, d: int) -> np.ndarray:
    num = np.empty((n, n, d), dtype=object)
    num.fill(0)
    return num


def _as_scalar(field: CycloField, v) -> CycloScalar:
    if isinstance(v, CycloScalar):
        if v.field is not field:
            raise OrderMismatch(f"orders {field.order} and {v.order} differ")
        return v
    return CycloScalar.from_rational(field.order, v)


def commutator(a: SquareMatrix, b: SquareMatrix) -> SquareMatrix:
    return a @ b - b @ a


def anticommutator(a: SquareMatrix, b: SquareMatrix) -> SquareMatrix:
    return a @ b + b @ a
