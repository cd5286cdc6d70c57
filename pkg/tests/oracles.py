"""Reference computations that do not go through the package's arithmetic."""
import math

import mpmath
import numpy as np
import sympy

mpmath.mp.dps = 50


def cyclotomic_coeffs(M):
    x = sympy.Symbol("x")
    poly = sympy.Poly(sympy.cyclotomic_poly(M, x), x)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


def mp_eval(order, coeffs):
    """High-precision value of sum_j c_j zeta_M^j."""
    total = mpmath.mpc(0)
    for j, c in enumerate(coeffs):
        c = mpmath.mpf(c.numerator) / c.denominator if hasattr(c, "numerator") else mpmath.mpf(c)
        total += c * mpmath.expj(2 * mpmath.pi * j / order)
    return total


def q(N, k=1):
    return np.exp(2j * np.pi * k / N)


def dft(N, normalized=True):
    k = np.arange(N)
    F = np.exp(2j * np.pi * np.outer(k, k) / N)
    return F / math.sqrt(N) if normalized else F


def X(N):
    return np.diag(2 * np.sin(2 * np.pi * np.arange(N) / N)).astype(complex)


def Y(N):
    out = np.zeros((N, N), dtype=complex)
    for l in range(N):
        out[(l + 1) % N, l] += 1j
        out[(l - 1) % N, l] -= 1j
    return out


def Z(N):
    p = np.exp(1j * np.pi / N)
    out = np.zeros((N, N), dtype=complex)
    for l in range(N):
        out[(l + 1) % N, l] += p * q(N, l)
        out[(l - 1) % N, l] += p * q(N, -l)
    return out


def Ztilde(N):
    out = np.zeros((N, N))
    for l in range(N):
        out[(l + 1) % N, l] = out[(l - 1) % N, l] = 1
    return out.astype(complex)


def S(N):
    return np.diag([(-1) ** (k * N) * np.exp(1j * np.pi * k * k / N) for k in range(N)])


def Pd(N):
    out = np.zeros((N, N), dtype=complex)
    for l in range(N):
        out[(-l) % N, l] = 1
    return out


def A(N):
    return X(N) + 1j * Y(N)


def W(N):
    return -2j * (X(N) @ Y(N) - Y(N) @ X(N))


def intertwiner_kernel_dimension(N, tol=1e-9):
    """Nullity of M -> M F - i F M over cyclic tridiagonal M, by SVD of the vectorized map."""
    F = dft(N, normalized=False)
    cols = []
    for offset in (1, 0, -1):  # sub, diag, super
        for k in range(N):
            E = np.zeros((N, N), dtype=complex)
            E[(k + offset) % N, k] = 1
            cols.append((E @ F - 1j * F @ E).ravel())
    s = np.linalg.svd(np.array(cols).T, compute_uv=False)
    return int(np.sum(s <= tol * s[0]))
