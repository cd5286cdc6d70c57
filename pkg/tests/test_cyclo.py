import cmath
import math
import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dftalg.cyclo import (
    CycloScalar,
    c_of,
    cyclotomic_polynomial,
    euler_phi,
    field_order_for,
    get_field,
    s_of,
)
from dftalg.errors import DegenerateDimension, DivisionByZero, OrderMismatch

from . import oracles

ORDERS = [4, 8, 12, 20, 24, 28, 36]


@pytest.mark.parametrize("N,M", [(3, 12), (4, 8), (5, 20), (6, 12), (16, 32)])
def test_field_order(N, M):
    assert field_order_for(N) == M


@pytest.mark.parametrize("N", [-1, 0, 1, 2])
def test_field_order_rejects_small(N):
    with pytest.raises(DegenerateDimension):
        field_order_for(N)


def test_cyclotomic_frozen():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


@pytest.mark.parametrize("M", list(range(1, 61)) + [105])
def test_cyclotomic_against_sympy(M):
    assert cyclotomic_polynomial(M) == oracles.cyclotomic_coeffs(M)
    assert len(cyclotomic_polynomial(M)) - 1 == euler_phi(M)


@pytest.mark.parametrize("M", ORDERS + [5, 7, 9, 15, 30])
def test_minimal_polynomial_vanishes(M):
    z = CycloScalar.zeta(M)
    total = sum((c * z**k for k, c in enumerate(cyclotomic_polynomial(M))), CycloScalar.from_rational(M, 0))
    assert total.is_zero()


def test_coeff_length_is_degree():
    for M in ORDERS:
        assert len(CycloScalar.zeta(M, 3).coeffs) == euler_phi(M)


def test_trivial_identities():
    one = CycloScalar.from_rational(12, 1)
    assert (one + (-one)).is_zero()
    i = CycloScalar.zeta(4)
    assert i * i == -1


def test_geometric_sum_vanishes_N5():
    M = field_order_for(5)
    q = CycloScalar.zeta(M, M // 5)
    total = sum((q**n for n in range(5)), CycloScalar.from_rational(M, 0))
    assert abs(complex(total)) < 1e-15  # float oracle agrees before the exact check
    assert total.is_zero()


def test_s_of_examples():
    assert s_of(0, 7).is_zero()
    assert s_of(1, 4) == 1
    for N in range(3, 13):
        assert sum((s_of(k, N) for k in range(1, N)), CycloScalar.from_rational(field_order_for(N), 0)).is_zero()
        for n in range(N):
            assert abs(complex(s_of(n, N)) - math.sin(2 * math.pi * n / N)) < 1e-14
            assert abs(complex(c_of(n, N)) - math.cos(2 * math.pi * n / N)) < 1e-14


def test_inverse_of_zero():
    with pytest.raises(DivisionByZero):
        CycloScalar.from_rational(20, 0).inv()
    with pytest.raises(DivisionByZero):
        CycloScalar.zeta(20) / 0


def test_order_mismatch():
    with pytest.raises(OrderMismatch):
        CycloScalar.zeta(12) + CycloScalar.zeta(20)
    with pytest.raises(OrderMismatch):
        CycloScalar.zeta(12).lift(20)


def test_lift_preserves_value():
    a = CycloScalar(12, [1, Fraction(2, 3), 0, -5])
    b = a.lift(24)
    assert b.order == 24
    assert abs(complex(a) - complex(b)) < 1e-13


def _random_scalar(rng, M, span=6):
    d = euler_phi(M)
    coeffs = [Fraction(rng.randint(-span, span), rng.randint(1, 5)) for _ in range(d)]
    return CycloScalar(M, coeffs)


@pytest.mark.parametrize("M", ORDERS)
def test_inverse_thousand_random(M):
    rng = random.Random(M)
    one = CycloScalar.from_rational(M, 1)
    done = 0
    while done < 1000:
        a = _random_scalar(rng, M)
        if a.is_zero():
            continue
        assert a * a.inv() == one
        done += 1


scalars = st.builds(
    lambda M, c: CycloScalar(M, c),
    st.sampled_from(ORDERS),
    st.lists(st.fractions(min_value=-10, max_value=10, max_denominator=7), min_size=1, max_size=30),
)


def _pair(M):
    c = st.lists(st.integers(-20, 20), min_size=1, max_size=2 * euler_phi(M))
    return st.tuples(c, c).map(lambda t: (CycloScalar(M, t[0]), CycloScalar(M, t[1])))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(ORDERS).flatmap(_pair))
def test_ring_axioms(pair):
    a, b = pair
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * a == a * a + b * a
    assert a - b + b == a


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(ORDERS).flatmap(_pair))
def test_conj_is_involutive_homomorphism(pair):
    a, b = pair
    assert a.conj().conj() == a
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a + b).conj() == a.conj() + b.conj()
    assert abs(complex(a.conj()) - complex(a).conjugate()) < 1e-9 * (1 + abs(complex(a)))


@settings(max_examples=300, deadline=None)
@given(scalars)
def test_float_image_matches_high_precision(a):
    ref = oracles.mp_eval(a.order, a.coeffs)
    got = complex(a)
    assert abs(got - complex(ref)) <= 1e-12 * (1 + abs(complex(ref)))


def test_zero_test_soundness_fuzz():
    rng = random.Random(7)
    seen_zero = seen_nonzero = 0
    for _ in range(400):
        M = rng.choice(ORDERS)
        d = euler_phi(M)
        # raw (unreduced) polynomials in zeta of degree up to M: many reduce to zero
        raw = [0] * M
        if rng.random() < 0.5:
            k = rng.randint(0, M - 1)
            step = rng.choice([s for s in range(1, M) if M % s == 0])
            for j in range(0, M, step):
                raw[(j + k) % M] += 1  # a full coset sum, which vanishes when step < M
        for _ in range(rng.randint(0, 2)):
            raw[rng.randrange(M)] += rng.randint(-1, 1)
        a = CycloScalar(M, raw)
        mag = abs(oracles.mp_eval(M, raw))
        assert a.is_zero() == (mag < mpmath.mpf("1e-20"))
        seen_zero += a.is_zero()
        seen_nonzero += not a.is_zero()
        assert len(a.coeffs) == d
    assert seen_zero > 20 and seen_nonzero > 20


def test_division_and_powers():
    M = 20
    z = CycloScalar.zeta(M)
    assert z**M == 1
    assert z**-1 == z.conj()
    assert (z / z) == 1
    assert 1 / z == z ** (M - 1)
    assert abs(complex(z**3) - cmath.exp(2j * math.pi * 3 / M)) < 1e-15


def test_json_roundtrip():
    a = CycloScalar(12, [Fraction(1, 2), -3, 0, Fraction(7, 3)])
    js = a.to_json()
    assert js["order"] == 12
    assert CycloScalar(12, [Fraction(c) for c in js["coeffs"]]) == a


def test_field_tables_consistent():
    for M in ORDERS:
        f = get_field(M)
        assert f.reduction.shape == (2 * f.degree - 1, f.degree)
        # conj_table row j is the reduced image of zeta^{-j}
        for j in range(f.degree):
            assert CycloScalar(M, list(f.conj_table[j])) == CycloScalar.zeta(M, (-j) % M)
