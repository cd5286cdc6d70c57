import math
from fractions import Fraction

import numpy as np
import pytest

from dftalg.backend import get_backend
from dftalg.errors import DegenerateDimension, UnsupportedNormalization
from dftalg.matrix import ExactMatrix, commutator
from dftalg.operators import (
    OPERATOR_IDS,
    build_operator,
    canonical_A,
    canonical_Adag,
    circulant_Ztilde,
    commutator_C,
    cyclic_tridiagonal,
    cyclic_Z,
    dft,
    gauge_S,
    gauge_S_inverse,
    heun_general_W,
    heun_W,
    intertwiner_A,
    intertwiner_B,
    k_generators,
    momentum_Y,
    position_X,
    reflection_Pd,
)

from . import oracles

ORACLE = {
    "X": oracles.X,
    "Y": oracles.Y,
    "Z": oracles.Z,
    "Ztilde": oracles.Ztilde,
    "S": oracles.S,
    "Pd": oracles.Pd,
    "A": oracles.A,
    "Adag": lambda N: oracles.A(N).conj().T,
    "W": oracles.W,
    "C": oracles.W,
}


@pytest.mark.parametrize("N", range(3, 25))
def test_exact_float_and_oracle_agree(N):
    for op in OPERATOR_IDS:
        if op == "phi":
            continue
        ex = build_operator(op, N, "exact").to_numpy()
        fl = build_operator(op, N, "float").to_numpy()
        assert np.abs(ex - fl).max() <= 1e-12, op
        if op in ORACLE:
            assert np.abs(fl - ORACLE[op](N)).max() <= 1e-12, op
    F = dft(N, backend="exact").to_numpy()
    assert np.abs(F - oracles.dft(N, normalized=False)).max() <= 1e-11
    assert np.abs(dft(N, True, "float").to_numpy() - oracles.dft(N)).max() <= 1e-12


def test_backend_rejects_small_N():
    for be in ("exact", "float"):
        with pytest.raises(DegenerateDimension):
            get_backend(2, be)


def test_dft_examples():
    bk = get_backend(3, "exact")
    F = dft(3)
    assert F.entry(1, 2) == bk.q(2)
    assert abs(dft(4, True, "float").entry(1, 1) - 0.5j) < 1e-15
    with pytest.raises(UnsupportedNormalization):
        dft(5, normalized=True)


@pytest.mark.parametrize("N", [3, 4, 5, 8, 11])
def test_dft_unitarity(N):
    F = dft(N)
    assert F @ F.H == F.H @ F
    assert (F @ F.H - ExactMatrix.identity(F.field, N) * N).is_zero()
    assert F == F.T
    Phi = dft(N, True, "float").to_numpy()
    assert np.abs(Phi @ Phi.conj().T - np.eye(N)).max() <= 1e-12


def test_intertwiner_examples():
    N = 6
    bk = get_backend(N, "exact")
    assert intertwiner_A(N, 0, 0).is_zero()
    A = intertwiner_A(N, -bk.i, 0)
    assert A == canonical_A(N)
    for n in range(N):
        assert A.entry((n + 1) % N, n) == -1
        assert A.entry(n, n) == bk.s(n) * 2
        assert A.entry(n, (n + 1) % N) == 1


@pytest.mark.parametrize("N", [3, 5, 6, 8])
def test_B_is_adjoint_of_A(N):
    bk = get_backend(N, "exact")
    alpha = bk.scalar(Fraction(2, 3)) + bk.i * 5
    beta = bk.scalar(-1) + bk.i * Fraction(1, 7)
    A = intertwiner_A(N, alpha, beta)
    B = intertwiner_B(N, -alpha.conj(), -beta.conj() / bk.q(1))
    assert B == A.H


@pytest.mark.parametrize("N", [3, 4, 5, 6, 9])
def test_canonical_A_properties(N):
    bk = get_backend(N, "exact")
    A, Ad = canonical_A(N), canonical_Adag(N)
    X, Y = position_X(N), momentum_Y(N)
    assert A.trace().is_zero()
    assert Ad == A.H and Ad == A.T
    assert A - A.T == Y * (bk.i * 2)
    assert (A + Ad) / 2 == X
    assert (A - Ad) / (bk.i * 2) == Y


def test_small_examples():
    assert canonical_A(4).entry(1, 1) == 2
    X3 = position_X(3, "float").to_numpy()
    assert np.allclose(np.diag(X3), [0, math.sqrt(3), -math.sqrt(3)], atol=1e-15)
    Y = momentum_Y(7, "exact")
    bk = get_backend(7, "exact")
    assert Y.entry(0, 6) == bk.i and Y.entry(6, 0) == -bk.i
    P = reflection_Pd(5)
    assert P.entry(3, 2) == 1 and P @ P == ExactMatrix.identity(P.field, 5)


@pytest.mark.parametrize("N", [3, 4, 5, 6, 7, 10])
def test_Y_action_on_basis(N):
    Y = momentum_Y(N, "float").to_numpy()
    for n in range(N):
        e = np.eye(N)[:, n]
        want = 1j * (np.eye(N)[:, (n + 1) % N] - np.eye(N)[:, (n - 1) % N])
        assert np.allclose(Y @ e, want)


@pytest.mark.parametrize("N", [3, 4, 5, 6, 7, 8, 12])
def test_C_closed_form(N):
    bk = get_backend(N, "exact")
    C = commutator_C(N)
    assert C == heun_W(N) and C == C.T
    X, Y = position_X(N), momentum_Y(N)
    assert C == commutator(X, Y) * (bk.i * -2)
    for k in range(N):
        assert C.entry(k, k).is_zero()
        assert C.entry(k, (k + 1) % N) == (bk.s(k + 1) - bk.s(k)) * 4
    assert C.entry(0, 1) == bk.s(1) * 4


@pytest.mark.parametrize("N", [3, 4, 5, 6, 9])
def test_Z_forms_and_action(N):
    bk = get_backend(N, "exact")
    Z = cyclic_Z(N)
    # q^{-1/2}(q^k delta_{k,l+1} + q^{-k} delta_{k,l-1}) form
    alt = bk.matrix(
        {
            **{((l + 1) % N, l): bk.p(-1) * bk.q((l + 1) % N) for l in range(N)},
            **{((l - 1) % N, l): bk.p(-1) * bk.q(-((l - 1) % N)) for l in range(N)},
        }
    )
    assert Z == alt
    assert Z == Z.H
    Zf = cyclic_Z(N, "float").to_numpy()
    assert np.abs(Zf - Zf.conj().T).max() <= 1e-12
    assert gauge_S(N) @ gauge_S_inverse(N) == ExactMatrix.identity(Z.field, N)


@pytest.mark.parametrize("N", range(3, 13))
def test_hermiticity(N):
    for op in ("X", "Y", "Z", "C", "W"):
        ex = build_operator(op, N, "exact")
        assert ex == ex.H, op
        fl = build_operator(op, N, "float").to_numpy()
        assert np.abs(fl - fl.conj().T).max() <= 1e-12


def test_general_W_reproduces_W():
    for N in (3, 5, 8):
        bk = get_backend(N, "exact")
        two_i = bk.i * 2
        assert heun_general_W(N, 0, -two_i, two_i, 0, 0) == heun_W(N)


def test_k_generators_exact_division():
    N = 7
    bk = get_backend(N, "exact")
    K0, K1, K2 = k_generators(N)
    assert K0 * (bk.s(1) * 2) == position_X(N)
    assert K1 * (bk.s(1) * 2) == momentum_Y(N)
    assert K2 * (bk.s(1) * 2) == cyclic_Z(N) * bk.i


def test_cyclic_tridiagonal_corners():
    N = 4
    M = cyclic_tridiagonal(N, [1, 2, 3, 4], [0] * 4, [5, 6, 7, 8], "float").to_numpy()
    assert M[0, 3] == 4 and M[3, 0] == 8
    assert M[1, 0] == 1 and M[0, 1] == 5


def test_ztilde_is_circulant():
    Zt = circulant_Ztilde(4, "float").to_numpy()
    assert np.array_equal(Zt.real, [[0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0]])


def test_unknown_operator():
    with pytest.raises(KeyError):
        build_operator("Q", 5)


def test_matrix_json_formats():
    ex = position_X(3).to_json()
    assert ex["backend"] == "exact" and ex["n"] == 3
    assert set(ex["entries"][1][1]) == {"order", "coeffs"}
    fl = position_X(3, "float").to_json()
    assert set(fl["entries"][1][1]) == {"re", "im"}
