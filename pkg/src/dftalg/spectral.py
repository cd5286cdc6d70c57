"""Spectra, ranks, eigenbases and the ladder construction for A^dagger A."""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .backend import get_backend
from .cyclo import CycloScalar
from .errors import InternalError, NotHermitian
from .exact_linalg import exact_rank
from .matrix import ExactMatrix, SquareMatrix
from .operators import (
    build_operator,
    canonical_A,
    circulant_Ztilde,
    cyclic_Z,
    dft,
    gauge_S,
    gauge_S_inverse,
    momentum_Y,
    position_X,
    reflection_Pd,
)
from .relations import RelationReport, Verdict, _judge

__all__ = [
    "LadderReport",
    "OverlapTable",
    "SpectralReport",
    "check_unitary_equivalence",
    "circulant_similarity",
    "circulant_spectrum_check",
    "eigenbasis_epsilon",
    "exact_rank",
    "hermitian_spectrum",
    "ladder_hierarchy",
    "spectral_report",
]

HERMITIAN_TOL = 1e-10
CLUSTER_RTOL = 1e-8
PARITY_TOL = 1e-8
DROP_TOL = 1e-10


@dataclass
class SpectralReport:
    operator_id: str
    n: int
    eigenvalues: Optional[list[float]]
    levels: Optional[list[float]]
    multiplicities: Optional[list[int]]
    rank: int
    nullity: int
    degenerate_pairs: list = field(default_factory=list)
    rank_method: str = "eigenvalues"

    @property
    def simple(self) -> bool:
        return self.multiplicities is not None and all(m == 1 for m in self.multiplicities)

    def to_dict(self) -> dict:
        return {
            "kind": "spectrum",
            "operator_id": self.operator_id,
            "n": self.n,
            "eigenvalues": self.eigenvalues,
            "levels": self.levels,
            "multiplicities": self.multiplicities,
            "rank": self.rank,
            "nullity": self.nullity,
            "degenerate_pairs": self.degenerate_pairs,
            "rank_method": self.rank_method,
        }


def _as_array(M) -> np.ndarray:
    if isinstance(M, SquareMatrix):
        return M.to_numpy()
    return np.asarray(M, dtype=complex)


def cluster(values, rtol: float = CLUSTER_RTOL):
    """Group sorted reals whose neighbours differ by at most rtol * max(max|v|, 1)."""
    values = sorted(values)
    if not values:
        return [], []
    tol = rtol * max(max(abs(v) for v in values), 1.0)
    groups = [[values[0]]]
    for v in values[1:]:
        if v - groups[-1][-1] <= tol:
            groups[-1].append(v)
        else:
            groups.append([v])
    return [math.fsum(g) / len(g) for g in groups], [len(g) for g in groups]


def hermitian_spectrum(M, operator_id: str = "") -> SpectralReport:
    """Sorted eigenvalues of a Hermitian matrix, clustered into levels."""
    a = _as_array(M)
    herm = float(np.abs(a - a.conj().T).max()) if a.size else 0.0
    if herm > HERMITIAN_TOL:
        raise NotHermitian(f"{operator_id or 'matrix'} deviates from its adjoint by {herm:.3e}")
    evals = np.linalg.eigvalsh(a).tolist()
    levels, mult = cluster(evals)
    tol = CLUSTER_RTOL * max(max((abs(v) for v in evals), default=0.0), 1.0)
    nullity = sum(m for lv, m in zip(levels, mult) if abs(lv) <= tol)
    n = a.shape[0]
    return SpectralReport(
        operator_id,
        n,
        evals,
        levels,
        mult,
        n - nullity,
        nullity,
        [[lv, m] for lv, m in zip(levels, mult) if m > 1],
    )


def spectral_report(operator_id: str, N: int) -> SpectralReport:
    """Spectrum (if Hermitian) and rank of a named operator.

    The rank is exact whenever the operator lives in the exact backend.
    """
    fm = build_operator(operator_id, N, "float")
    a = fm.to_numpy()
    hermitian = float(np.abs(a - a.conj().T).max()) <= HERMITIAN_TOL
    if hermitian:
        rep = hermitian_spectrum(fm, operator_id)
    else:
        rep = SpectralReport(operator_id, N, None, None, None, 0, 0)
    try:
        em = build_operator(operator_id, N, "exact")
    except Exception:
        em = None
    if isinstance(em, ExactMatrix):
        r, _ = exact_rank(em)
        rep.rank, rep.nullity, rep.rank_method = r, N - r, "exact"
    elif not hermitian:
        r = int(np.linalg.matrix_rank(a))
        rep.rank, rep.nullity, rep.rank_method = r, N - r, "svd"
    return rep


# --------------------------------------------------------------------------
# X, Y and the eigenbasis of Y
# --------------------------------------------------------------------------


def check_unitary_equivalence(N: int, backend="exact") -> list[RelationReport]:
    """Y F = F X and X F = -F Y; the float backend also checks Y = Phi X Phi^dagger."""
    bk = get_backend(N, backend)
    t0 = time.perf_counter()
    X, Y, F = position_X(N, bk), momentum_Y(N, bk), dft(N, backend=bk)
    out = [
        _judge("unitary_equiv.YF_FX", bk, Y @ F, F @ X, t0),
        _judge("unitary_equiv.XF_mFY", bk, X @ F, -(F @ Y), t0),
    ]
    if bk.name == "float":
        Phi = dft(N, normalized=True, backend=bk)
        out.append(_judge("unitary_equiv.Y_PhiXPhiH", bk, Y, Phi @ X @ Phi.H, t0))
    return out


@dataclass
class OverlapTable:
    """Overlaps (epsilon_k, e_l), conjugate-linear in the first slot."""

    n: int
    entries: np.ndarray
    convention: str = "conjugate-linear in the first argument"
    eigen_relation_exact: bool = False
    two_diagonal_exact: bool = False
    monomial_gram_exact: bool = False
    monomial_gram_sqrt_prefactor_residual: float = float("nan")

    def to_dict(self) -> dict:
        return {
            "kind": "overlap",
            "n": self.n,
            "convention": self.convention,
            "entries": [[{"re": float(z.real), "im": float(z.imag)} for z in row] for row in self.entries],
            "eigen_relation_exact": self.eigen_relation_exact,
            "two_diagonal_exact": self.two_diagonal_exact,
            "monomial_gram_exact": self.monomial_gram_exact,
            "monomial_gram_sqrt_prefactor_residual": self.monomial_gram_sqrt_prefactor_residual,
        }


def monomial_gram(N: int) -> ExactMatrix:
    """G_kl = N^{-1} sum_j conj(mu_j^k) mu_j^l with mu_j = q^{-j}, computed exactly."""
    bk = get_backend(N, "exact")
    entries = {}
    for k in range(N):
        for l in range(N):
            total = CycloScalar.from_rational(bk.order, 0)
            for j in range(N):
                # conj(q^{-jk}) q^{-jl} = q^{j(k-l)}
                total = total + bk.q(j * (k - l))
            entries[(k, l)] = total / N
    return bk.matrix(entries)


def eigenbasis_epsilon(N: int) -> OverlapTable:
    """Columns of the DFT as eigenvectors of Y, with their overlaps on the standard basis."""
    bk = get_backend(N, "exact")
    X, Y, F = position_X(N, bk), momentum_Y(N, bk), dft(N, backend=bk)
    # Y eps_n = x_n eps_n  <=>  Y F = F X
    eigen_ok = (Y @ F - F @ X).is_zero()
    # X eps_n = i (eps_{n-1} - eps_{n+1})  <=>  X F = F T, T_{n-1,n} = i, T_{n+1,n} = -i
    T = bk.matrix({**{((n - 1) % N, n): bk.i for n in range(N)}, **{((n + 1) % N, n): -bk.i for n in range(N)}})
    two_diag_ok = (X @ F - F @ T).is_zero()

    Phi = dft(N, normalized=True, backend="float").to_numpy()
    table = Phi.conj().T  # (eps_k, e_l) = conj(Phi[l, k])

    gram = monomial_gram(N)
    gram_ok = (gram - bk.identity()).is_zero()
    # the same sum under an N^{-1/2} prefactor equals sqrt(N) * I
    alt = gram.to_numpy() * math.sqrt(N)
    alt_res = float(np.abs(alt - np.eye(N)).max())
    return OverlapTable(N, table, eigen_relation_exact=eigen_ok, two_diagonal_exact=two_diag_ok,
                        monomial_gram_exact=gram_ok, monomial_gram_sqrt_prefactor_residual=alt_res)


# --------------------------------------------------------------------------
# Z and the circulant
# --------------------------------------------------------------------------


def circulant_similarity(N: int, backend="exact") -> list[RelationReport]:
    """S^-1 Z S = (-1)^N Ztilde and the recurrence x_{k+1} = (-1)^N q^{k+1/2} x_k of S's diagonal."""
    bk = get_backend(N, backend)
    t0 = time.perf_counter()
    sign = -1 if N % 2 else 1
    S, Si = gauge_S(N, bk), gauge_S_inverse(N, bk)
    Z, Zt = cyclic_Z(N, bk), circulant_Ztilde(N, bk)
    reports = [
        _judge("circulant.S_inverse", bk, Si @ S, bk.identity(), t0),
        _judge("circulant.similarity", bk, Si @ Z @ S, Zt * sign, t0),
    ]
    # diagonal recurrence, read cyclically (x_N = x_0)
    x = [S.entry(k, k) for k in range(N)]
    lhs = bk.matrix({(k, k): x[(k + 1) % N] for k in range(N)})
    rhs = bk.matrix({(k, k): x[k] * bk.p(2 * k + 1) * sign for k in range(N)})
    reports.append(_judge("circulant.recurrence", bk, lhs, rhs, t0))
    return reports


def circulant_spectrum_check(N: int) -> RelationReport:
    """Sorted spectrum of Z against (-1)^N 2 cos(2 pi n / N)."""
    t0 = time.perf_counter()
    sign = -1 if N % 2 else 1
    got = np.array(hermitian_spectrum(cyclic_Z(N, "float"), "Z").eigenvalues)
    want = np.sort([sign * 2 * math.cos(2 * math.pi * n / N) for n in range(N)])
    res = float(np.abs(got - want).max())
    verdict = Verdict.RESIDUAL_NORM if res <= 1e-10 else Verdict.FAILED
    return RelationReport("circulant.spectrum", N, "float", verdict, res, (time.perf_counter() - t0) * 1e3)


# --------------------------------------------------------------------------
# ladder construction from the kernel of A
# --------------------------------------------------------------------------


@dataclass
class LadderReport:
    n: int
    null_dimension: int
    span_dimension: int
    parities: list
    all_pd_symmetric: bool
    dropped: int
    commutation_exact: bool
    eigen_multiplicities: list = field(default_factory=list)
    mixed_parity_levels: list = field(default_factory=list)
    vectors: Optional[np.ndarray] = None

    def to_dict(self) -> dict:
        return {
            "kind": "ladder",
            "n": self.n,
            "null_dimension": self.null_dimension,
            "span_dimension": self.span_dimension,
            "parities": self.parities,
            "all_pd_symmetric": self.all_pd_symmetric,
            "dropped": self.dropped,
            "commutation_exact": self.commutation_exact,
            "eigen_multiplicities": self.eigen_multiplicities,
            "mixed_parity_levels": self.mixed_parity_levels,
        }


def _parity(P: np.ndarray, v: np.ndarray) -> Optional[int]:
    w = P @ v
    if np.linalg.norm(w - v) <= PARITY_TOL:
        return 1
    if np.linalg.norm(w + v) <= PARITY_TOL:
        return -1
    return None


def _orthogonalize(v: np.ndarray, basis: list[np.ndarray]) -> np.ndarray:
    for _ in range(2):
        for b in basis:
            v = v - (b.conj() @ v) * b
    return v


def mixed_parity_eigenspaces(H: np.ndarray, P: np.ndarray):
    """Multiplicities of H's eigenvalues and the levels whose eigenspace holds both P-parities.

    Only such levels admit eigenvectors that are not P-eigenvectors, so this
    does not depend on which eigenbasis a solver happens to return.
    """
    w, V = np.linalg.eigh(H)
    levels, mult = cluster(w.tolist())
    mixed, start = [], 0
    for lv, m in zip(levels, mult):
        U = V[:, start:start + m]
        start += m
        pe = np.linalg.eigvalsh(U.conj().T @ P @ U)
        if pe.min() < -0.5 and pe.max() > 0.5:
            mixed.append([lv, m])
    return mult, mixed


def ladder_hierarchy(N: int) -> LadderReport:
    """Start from an exact kernel basis of A and climb with A^dagger.

    Chains are advanced in round-robin order; each new vector is
    orthonormalized against everything kept so far (two passes of modified
    Gram-Schmidt).  Vectors that collapse below ``DROP_TOL`` end their
    chain.  Stops at N vectors or when every chain has ended.  Also records
    which eigenspaces of A^dagger A mix the two P_d-parities.
    """
    A = canonical_A(N, "exact")
    P = reflection_Pd(N, "exact")
    AdA = A.H @ A
    commutes = (AdA @ P - P @ AdA).is_zero()
    r, null = exact_rank(A)
    if not null:
        raise InternalError(f"A has trivial kernel at N={N} (rank {r})")

    Ad = A.H.to_numpy()
    Pf = P.to_numpy()
    kept: list[np.ndarray] = []
    dropped = 0
    chains = []
    for vec in null:
        v = np.array([complex(c) for c in vec])
        v = _orthogonalize(v, kept)
        nv = np.linalg.norm(v)
        if nv < DROP_TOL:
            dropped += 1
            continue
        kept.append(v / nv)
        chains.append(kept[-1])
    while len(kept) < N and chains:
        nxt = []
        for head in chains:
            if len(kept) >= N:
                break
            v = _orthogonalize(Ad @ head, kept)
            nv = np.linalg.norm(v)
            if nv < DROP_TOL:
                dropped += 1
                continue
            kept.append(v / nv)
            nxt.append(kept[-1])
        chains = nxt
    parities = [_parity(Pf, v) for v in kept]
    mult, mixed = mixed_parity_eigenspaces(AdA.to_numpy(), Pf)
    return LadderReport(
        N,
        len(null),
        len(kept),
        parities,
        all(p is not None for p in parities),
        dropped,
        commutes,
        mult,
        mixed,
        np.array(kept),
    )


def spectral_records(N: int, operator_ids) -> list[dict]:
    return [spectral_report(op, N).to_dict() for op in operator_ids]

