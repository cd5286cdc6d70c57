"""Constructors for the operators attached to the N-point DFT.

Indices run 0..N-1 and are taken mod N.  "Cyclic tridiagonal" means the
diagonal, the sub- and superdiagonal, and the corners (0, N-1), (N-1, 0).
The exact backend cannot hold N^{-1/2}, so it works with the unnormalized
transform F = sqrt(N) * Phi, F_kl = q^{kl}.
"""
from __future__ import annotations

from .backend import get_backend
from .errors import UnsupportedNormalization
from .matrix import SquareMatrix, commutator

__all__ = [
    "OPERATOR_IDS",
    "build_operator",
    "canonical_A",
    "canonical_Adag",
    "circulant_Ztilde",
    "commutator_C",
    "cyclic_tridiagonal",
    "cyclic_Z",
    "dft",
    "gauge_S",
    "gauge_S_inverse",
    "heun_W",
    "heun_general_W",
    "heun_position",
    "intertwiner_A",
    "intertwiner_B",
    "k_generators",
    "momentum_Y",
    "position_X",
    "reflection_Pd",
]


def dft(N: int, normalized: bool = False, backend="exact") -> SquareMatrix:
    """Phi_kl = N^{-1/2} q^{kl} (float only) or F_kl = q^{kl}."""
    bk = get_backend(N, backend)
    if normalized and bk.name == "exact":
        raise UnsupportedNormalization("the exact backend stores the unnormalized DFT; use normalized=False")
    scale = N ** -0.5 if normalized else 1
    return bk.matrix({(k, l): bk.q(k * l) * scale for k in range(N) for l in range(N)})


def cyclic_tridiagonal(N: int, sub, diag, sup, backend="exact") -> SquareMatrix:
    """sub[k] at (k+1, k), diag[k] at (k, k), sup[k] at (k, k+1), all mod N.

    So sub[N-1] is the top-right corner and sup[N-1] the bottom-left one.
    """
    bk = get_backend(N, backend)
    entries = {}
    for k in range(N):
        for key, val in (((k + 1) % N, k), sub[k]), ((k, k), diag[k]), ((k, (k + 1) % N), sup[k]):
            entries[key] = entries[key] + val if key in entries else val
    return bk.matrix(entries)


def _family_coefficients(bk, alpha, beta):
    i = bk.i
    q = bk.q
    a = [-i * alpha + beta * (i * q(-k) - q(k + 1)) for k in range(bk.N)]
    b = [alpha * (q(k) - q(-k)) for k in range(bk.N)]
    c = [i * alpha + beta * (q(-k) - i * q(k + 1)) for k in range(bk.N)]
    return a, b, c


def intertwiner_A(N: int, alpha, beta, backend="exact") -> SquareMatrix:
    """General cyclic tridiagonal solution of A Phi = i Phi A."""
    bk = get_backend(N, backend)
    a, b, c = _family_coefficients(bk, bk.scalar(alpha), bk.scalar(beta))
    return cyclic_tridiagonal(N, a, b, c, bk)


def intertwiner_B(N: int, alpha_t, beta_t, backend="exact") -> SquareMatrix:
    """General cyclic tridiagonal solution of B Phi = -i Phi B."""
    bk = get_backend(N, backend)
    alpha_t, beta_t = bk.scalar(alpha_t), bk.scalar(beta_t)
    i, q = bk.i, bk.q
    a = [i * alpha_t - beta_t * (i * q(-k) + q(k + 1)) for k in range(N)]
    b = [alpha_t * (q(k) - q(-k)) for k in range(N)]
    c = [-i * alpha_t + beta_t * (q(-k) + i * q(k + 1)) for k in range(N)]
    return cyclic_tridiagonal(N, a, b, c, bk)


def position_X(N: int, backend="exact") -> SquareMatrix:
    """X = 2 diag(s_0, ..., s_{N-1})."""
    bk = get_backend(N, backend)
    return bk.matrix({(k, k): bk.s(k) * 2 for k in range(N)})


def momentum_Y(N: int, backend="exact") -> SquareMatrix:
    """Y_kl = i (delta_{k,l+1} - delta_{k,l-1}); Y_{0,N-1} = i, Y_{N-1,0} = -i."""
    bk = get_backend(N, backend)
    entries = {}
    for l in range(N):
        entries[((l + 1) % N, l)] = bk.i
        entries[((l - 1) % N, l)] = -bk.i
    return bk.matrix(entries)


def canonical_A(N: int, backend="exact") -> SquareMatrix:
    bk = get_backend(N, backend)
    return position_X(N, bk) + momentum_Y(N, bk) * bk.i


def canonical_Adag(N: int, backend="exact") -> SquareMatrix:
    bk = get_backend(N, backend)
    return position_X(N, bk) - momentum_Y(N, bk) * bk.i


def commutator_C(N: int, backend="exact") -> SquareMatrix:
    """C = A A^T - A^T A."""
    A = canonical_A(N, backend)
    return commutator(A, A.T)


def cyclic_Z(N: int, backend="exact") -> SquareMatrix:
    """Z_kl = p (q^l delta_{k,l+1} + q^{-l} delta_{k,l-1}), p = q^{1/2}."""
    bk = get_backend(N, backend)
    entries = {}
    for l in range(N):
        entries[((l + 1) % N, l)] = bk.p(2 * l + 1)
        entries[((l - 1) % N, l)] = bk.p(1 - 2 * l)
    return bk.matrix(entries)


def circulant_Ztilde(N: int, backend="exact") -> SquareMatrix:
    """The symmetric 0/1 circulant with ones next to the diagonal (cyclically)."""
    bk = get_backend(N, backend)
    entries = {}
    for l in range(N):
        entries[((l + 1) % N, l)] = 1
        entries[((l - 1) % N, l)] = 1
    return bk.matrix(entries)


def _gauge_sign(k: int, N: int) -> int:
    # (-1)^{kN} as an integer
    return -1 if (k * N) % 2 else 1


def gauge_S(N: int, backend="exact") -> SquareMatrix:
    """Diagonal S_kk = (-1)^{kN} q^{k^2/2}."""
    bk = get_backend(N, backend)
    return bk.matrix({(k, k): bk.p(k * k) * _gauge_sign(k, N) for k in range(N)})


def gauge_S_inverse(N: int, backend="exact") -> SquareMatrix:
    bk = get_backend(N, backend)
    return bk.matrix({(k, k): bk.p(-k * k) * _gauge_sign(k, N) for k in range(N)})


def heun_W(N: int, backend="exact") -> SquareMatrix:
    """W = -2i [X, Y] (which equals [A, A^dagger])."""
    bk = get_backend(N, backend)
    return commutator(position_X(N, bk), momentum_Y(N, bk)) * (bk.i * -2)


def heun_general_W(N: int, tau0, tau1, tau2, tau3, tau4, backend="exact") -> SquareMatrix:
    """tau1 XY + tau2 YX + tau3 X + tau4 Y + tau0 I."""
    bk = get_backend(N, backend)
    X, Y = position_X(N, bk), momentum_Y(N, bk)
    t = [bk.scalar(v) for v in (tau0, tau1, tau2, tau3, tau4)]
    return (X @ Y) * t[1] + (Y @ X) * t[2] + X * t[3] + Y * t[4] + bk.identity() * t[0]


def heun_position(N: int, backend="exact") -> SquareMatrix:
    """2X: the normalization of the position generator in the Heun-algebra constants."""
    return position_X(N, backend) * 2


def reflection_Pd(N: int, backend="exact") -> SquareMatrix:
    """Permutation e_l -> e_{-l mod N}."""
    bk = get_backend(N, backend)
    return bk.matrix({((-l) % N, l): 1 for l in range(N)})


def k_generators(N: int, backend="exact"):
    """(K0, K1, K2) = (X, Y, iZ) / (2 s_1)."""
    bk = get_backend(N, backend)
    scale = bk.s(1) * 2
    if bk.name == "exact":
        scale = scale.inv()
    else:
        scale = 1 / scale
    return (
        position_X(N, bk) * scale,
        momentum_Y(N, bk) * scale,
        cyclic_Z(N, bk) * (bk.i * scale),
    )


def _phi(N, backend):
    bk = get_backend(N, backend)
    return dft(N, normalized=bk.name == "float", backend=bk)


_BUILDERS = {
    "phi": _phi,
    "A": canonical_A,
    "Adag": canonical_Adag,
    "X": position_X,
    "Y": momentum_Y,
    "C": commutator_C,
    "Z": cyclic_Z,
    "Ztilde": circulant_Ztilde,
    "S": gauge_S,
    "W": heun_W,
    "Pd": reflection_Pd,
    "K0": lambda N, bk: k_generators(N, bk)[0],
    "K1": lambda N, bk: k_generators(N, bk)[1],
    "K2": lambda N, bk: k_generators(N, bk)[2],
}

OPERATOR_IDS = tuple(_BUILDERS)


def build_operator(operator_id: str, N: int, backend="exact") -> SquareMatrix:
    """Look up an operator by its CLI name; ``phi`` is normalized only in the float backend."""
    try:
        builder = _BUILDERS[operator_id]
    except KeyError:
        raise KeyError(f"unknown operator {operator_id!r}; choose from {', '.join(OPERATOR_IDS)}") from None
    return builder(N, get_backend(N, backend))

