"""Exact arithmetic in cyclotomic fields Q(zeta_M).

An element is stored as integer numerators over one positive common
denominator, in the power basis 1, z, ..., z^(d-1) with d = phi(M), reduced
modulo the M-th cyclotomic polynomial.  The reduced form is canonical, so
equality and zero tests are exact.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

import numpy as np

from .errors import DegenerateDimension, DivisionByZero, OrderMismatch

__all__ = [
    "CycloField",
    "CycloScalar",
    "cyclotomic_polynomial",
    "euler_phi",
    "field_order_for",
    "get_field",
    "s_of",
    "c_of",
]


def field_order_for(N: int) -> int:
    """Smallest M with q = e^{2 pi i/N}, q^{1/2} and i all in Q(zeta_M)."""
    if N < 3:
        raise DegenerateDimension(f"N must be >= 3, got {N}")
    return math.lcm(4, 2 * N)


def euler_phi(M: int) -> int:
    result, m, p = M, M, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _divmod_monic(num: list[int], den: tuple[int, ...]) -> tuple[list[int], list[int]]:
    # integer long division by a monic polynomial, coefficients low -> high
    rem = list(num)
    dd = len(den) - 1
    if len(rem) <= dd:
        return [0], rem
    quot = [0] * (len(rem) - dd)
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k]
        if c:
            quot[k - dd] = c
            for j in range(dd + 1):
                rem[k - dd + j] -= c * den[j]
    return quot, rem[:dd]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(M: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_M, lowest degree first.

    Computed by dividing x^M - 1 exactly by Phi_d for every proper divisor d.
    """
    if M < 1:
        raise ValueError(f"order must be positive, got {M}")
    poly = [-1] + [0] * (M - 1) + [1]
    for d in range(1, M):
        if M % d == 0:
            poly, rem = _divmod_monic(poly, cyclotomic_polynomial(d))
            if any(rem):
                raise ArithmeticError(f"Phi_{d} does not divide x^{M} - 1")
    return tuple(poly)


class CycloField:
    """Lookup tables shared by all elements and matrices of one order M."""

    def __init__(self, order: int):
        self.order = order
        self.modulus = cyclotomic_polynomial(order)
        self.degree = d = len(self.modulus) - 1
        # reduced images of x^e, long enough for powers of zeta and for products
        span = max(order, 2 * d - 1)
        rows: list[tuple[int, ...]] = []
        cur = [1] + [0] * (d - 1)
        for _ in range(span):
            rows.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for j in range(d):
                    cur[j] -= top * self.modulus[j]
        self.powers = rows
        self.reduction = np.array(rows[: 2 * d - 1], dtype=np.int64).reshape(2 * d - 1, d)
        self.conj_rows = [rows[(-j) % order] for j in range(d)]
        self.conj_table = np.array(self.conj_rows, dtype=object).reshape(d, d)
        self.basis_values = np.array(
            [cmath.exp(2j * math.pi * j / order) for j in range(d)], dtype=complex
        )

    def __repr__(self) -> str:
        return f"CycloField({self.order})"

    def zeta_coeffs(self, k: int) -> tuple[int, ...]:
        return self.powers[k % self.order]

    def reduce(self, coeffs) -> list:
        """Reduce a coefficient list of any length modulo Phi_M (and z^M = 1)."""
        d, M = self.degree, self.order
        out = [0] * d
        for e, c in enumerate(coeffs):
            if not c:
                continue
            if e < d:
                out[e] += c
            else:
                row = self.powers[e % M] if e >= len(self.powers) else self.powers[e]
                for j, r in enumerate(row):
                    if r:
                        out[j] += c * r
        return out

    def mul_coeffs(self, a, b) -> list[int]:
        d = self.degree
        conv = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = conv[:d]
        for e in range(d, 2 * d - 1):
            c = conv[e]
            if c:
                for j, r in enumerate(self.powers[e]):
                    if r:
                        out[j] += c * r
        return out

    def multiplication_matrix(self, coeffs) -> np.ndarray:
        """Object matrix T with (v @ T) = v * element for coefficient rows v."""
        d = self.degree
        rows = []
        for a in range(d):
            shifted = [0] * a + list(coeffs)
            rows.append(self.reduce(shifted))
        return np.array(rows, dtype=object).reshape(d, d)


@lru_cache(maxsize=None)
def get_field(order: int) -> CycloField:
    return CycloField(order)


def _normalize(num, den: int) -> tuple[tuple[int, ...], int]:
    if den == 0:
        raise DivisionByZero("zero denominator")
    if den < 0:
        num, den = [-x for x in num], -den
    g = math.gcd(den, *num)
    if g > 1:
        num = [x // g for x in num]
        den //= g
    return tuple(num), den


def _to_num_den(coeffs) -> tuple[list[int], int]:
    fr = [Fraction(c) for c in coeffs]
    den = math.lcm(*(f.denominator for f in fr)) if fr else 1
    return [f.numerator * (den // f.denominator) for f in fr], den


class CycloScalar:
    """Immutable element of Q(zeta_M).

    >>> i = CycloScalar.zeta(4)
    >>> i * i == -1
    True
    """

    __slots__ = ("field", "_num", "_den", "_hash")

    def __init__(self, order: int, coeffs=()):
        field = get_field(order)
        num, den = _to_num_den(coeffs)
        self.field = field
        self._num, self._den = _normalize(field.reduce(num), den)
        self._hash = None

    @classmethod
    def _raw(cls, field: CycloField, num, den: int = 1) -> "CycloScalar":
        obj = object.__new__(cls)
        obj.field = field
        obj._num, obj._den = _normalize(num, den)
        obj._hash = None
        return obj

    @classmethod
    def zeta(cls, order: int, k: int = 1) -> "CycloScalar":
        field = get_field(order)
        return cls._raw(field, field.zeta_coeffs(k))

    @classmethod
    def from_rational(cls, order: int, value) -> "CycloScalar":
        fr = Fraction(value)
        field = get_field(order)
        return cls._raw(field, [fr.numerator] + [0] * (field.degree - 1), fr.denominator)

    # -- accessors -----------------------------------------------------------
    @property
    def order(self) -> int:
        return self.field.order

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    @property
    def numerators(self) -> tuple[int, ...]:
        return self._num

    @property
    def denominator(self) -> int:
        return self._den

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    # -- coercion ------------------------------------------------------------
    def _coerce(self, other) -> "CycloScalar":
        if isinstance(other, CycloScalar):
            if other.field is not self.field:
                raise OrderMismatch(f"orders {self.order} and {other.order} differ")
            return other
        if isinstance(other, (int, Rational)):
            return CycloScalar.from_rational(self.order, other)
        return NotImplemented

    def lift(self, order: int) -> "CycloScalar":
        """Embed into Q(zeta_order); requires self.order | order."""
        if order % self.order:
            raise OrderMismatch(f"{self.order} does not divide {order}")
        step = order // self.order
        field = get_field(order)
        coeffs = [0] * (step * (self.field.degree - 1) + 1)
        for j, c in enumerate(self._num):
            coeffs[j * step] = c
        return CycloScalar._raw(field, field.reduce(coeffs), self._den)

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._den, other._den
        return CycloScalar._raw(
            self.field, [x * b + y * a for x, y in zip(self._num, other._num)], a * b
        )

    __radd__ = __add__

    def __neg__(self):
        return CycloScalar._raw(self.field, [-x for x in self._num], self._den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloScalar._raw(
            self.field, self.field.mul_coeffs(self._num, other._num), self._den * other._den
        )

    __rmul__ = __mul__

    def inv(self) -> "CycloScalar":
        if self.is_zero():
            raise DivisionByZero("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return CycloScalar.from_rational(self.order, Fraction(self._den, self._num[0]))
        inv = _poly_inverse_mod([Fraction(c) for c in self._num], self.field.modulus)
        num, den = _to_num_den(inv)
        # self = num/den, so 1/self = den * (1/num)
        return CycloScalar._raw(self.field, [x * self._den for x in self.field.reduce(num)], den)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inv()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inv()
        k = abs(k)
        result = CycloScalar.from_rational(self.order, 1)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> "CycloScalar":
        """Complex conjugate: zeta -> zeta^(M-1)."""
        d = self.field.degree
        out = [0] * d
        for c, row in zip(self._num, self.field.conj_rows):
            if c:
                for j in range(d):
                    out[j] += c * row[j]
        return CycloScalar._raw(self.field, out, self._den)

    # -- comparisons and conversions -----------------------------------------
    def __eq__(self, other) -> bool:
        try:
            other = self._coerce(other)
        except OrderMismatch:
            return False
        if other is NotImplemented:
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.order, self._num, self._den))
        return self._hash

    def __complex__(self) -> complex:
        vals = self.field.basis_values
        re = math.fsum(c * vals[j].real for j, c in enumerate(self._num) if c)
        im = math.fsum(c * vals[j].imag for j, c in enumerate(self._num) if c)
        return complex(re / self._den, im / self._den)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"CycloScalar({self.order}, [{', '.join(str(c) for c in self.coeffs)}])"

    def __str__(self) -> str:
        terms = []
        for j, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if j == 0 else f"{c}*z^{j}")
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    if len(a) < len(b):
        return [Fraction(0)], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] / lead
        q[k] = c
        if c:
            for j, bj in enumerate(b):
                a[k + j] -= c * bj
    return q, _poly_trim(a[: len(b) - 1] or [Fraction(0)])


def _poly_sub_mul(s0, q, s1):
    prod = [Fraction(0)] * (len(q) + len(s1) - 1)
    for i, x in enumerate(q):
        if x:
            for j, y in enumerate(s1):
                prod[i + j] += x * y
    n = max(len(s0), len(prod))
    out = [Fraction(0)] * n
    for i, x in enumerate(s0):
        out[i] += x
    for i, x in enumerate(prod):
        out[i] -= x
    return _poly_trim(out)


def _poly_inverse_mod(a: list[Fraction], modulus) -> list[Fraction]:
    # extended Euclid; invariant r_k == s_k * a (mod modulus)
    r0, r1 = [Fraction(c) for c in modulus], _poly_trim(list(a))
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub_mul(s0, q, s1)
    if r1[0] == 0:
        raise DivisionByZero("element shares a factor with the modulus")
    return [c / r1[0] for c in s1]


def s_of(n: int, N: int) -> CycloScalar:
    """(q^n - q^-n) / (2i) in Q(zeta_M), M = field_order_for(N); equals sin(2 pi n / N)."""
    M = field_order_for(N)
    q_n = CycloScalar.zeta(M, (n * (M // N)) % M)
    q_mn = CycloScalar.zeta(M, (-n * (M // N)) % M)
    minus_half_i = CycloScalar.zeta(M, M // 4) * Fraction(-1, 2)
    return (q_n - q_mn) * minus_half_i


def c_of(n: int, N: int) -> CycloScalar:
    """(q^n + q^-n) / 2, i.e. cos(2 pi n / N)."""
    M = field_order_for(N)
    q_n = CycloScalar.zeta(M, (n * (M // N)) % M)
    q_mn = CycloScalar.zeta(M, (-n * (M // N)) % M)
    return (q_n + q_mn) * Fraction(1, 2)
