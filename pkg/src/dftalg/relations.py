"""Residual checks for every algebraic identity of the operator family.

Each check builds both sides of a relation in the requested backend and
returns :class:`RelationReport` objects.  In the exact backend a relation
holds iff the residual matrix is exactly zero; in the float backend the
residual's largest entry must stay below ``FLOAT_RTOL`` times the size of
the two sides.
"""
from __future__ import annotations

import math
import time
from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Any, Optional

from .backend import get_backend
from .cyclo import CycloScalar
from .exact_linalg import Echelon
from .matrix import SquareMatrix, anticommutator, commutator
from .operators import (
    canonical_A,
    cyclic_Z,
    dft,
    heun_position,
    heun_W,
    intertwiner_A,
    intertwiner_B,
    k_generators,
    momentum_Y,
    position_X,
    reflection_Pd,
)

FLOAT_RTOL = 1e-9


class Verdict(str, Enum):
    EXACT_ZERO = "ExactZero"
    RESIDUAL_NORM = "ResidualNorm"
    DEGENERATE = "Degenerate"
    FAILED = "Failed"


@dataclass
class RelationReport:
    relation_id: str
    n: int
    backend: str
    verdict: Verdict
    residual_inf_norm: Optional[float]
    elapsed_ms: float = 0.0
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict in (Verdict.EXACT_ZERO, Verdict.RESIDUAL_NORM)

    def to_dict(self, timestamps: bool = True) -> dict:
        d = asdict(self)
        d["verdict"] = self.verdict.value
        if not timestamps:
            d.pop("elapsed_ms")
        if not d["details"]:
            d.pop("details")
        return d


# --------------------------------------------------------------------------
# structure constants
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class StructureConstants:
    """Coefficients of the cubic, Casimir and Heun relations for one N.

    Members whose formula divides by 1+q^2, q+q^-1 or c_1 are ``None`` when
    ``degenerate`` (N = 4).  ``rho3`` is the value under which the Heun
    Casimir is central; two rejected alternatives are kept as ``rho3_alt_q``
    and ``rho3_alt_trig`` for audit.
    """

    n: int
    backend: str
    degenerate: bool
    beta1: Any
    beta2: Any
    r1: Any
    r2: Any
    g1: Any
    g2: Any
    g3: Any
    rho1: Any
    rho2: Any
    rho3: Any
    rho4: Any
    rho3_alt_q: Any
    rho3_alt_trig: Any
    aw3_casimir: Any
    heun_casimir: Any

    def as_complex(self) -> dict[str, Optional[complex]]:
        out = {}
        for k, v in asdict(self).items():
            if k in ("n", "backend", "degenerate"):
                continue
            out[k] = None if v is None else complex(v)
        return out


def _degenerate(N: int) -> bool:
    bk = get_backend(N, "exact")
    q, qi = bk.q(1), bk.q(-1)
    return any(d.is_zero() for d in (1 + q * q, q + qi, bk.c(1), 1 + q))


def structure_constants(N: int, backend="exact") -> StructureConstants:
    bk = get_backend(N, backend)
    q, qi = bk.q(1), bk.q(-1)
    s1, c1 = bk.s(1), bk.c(1)
    degenerate = _degenerate(N)

    r1 = (1 - q) ** 2 / (1 + q) ** 2
    r2 = -4 * (1 + q * q) * (q - qi) ** 2 / (1 + q) ** 2
    g1 = 16 * s1 * s1
    g2 = -16 * c1 * (1 + c1) * (1 - c1) ** 2
    g3 = 64 * (1 + c1) * (1 - c1) ** 2 * (3 * c1 + 1)
    rho2 = 4 * (q - qi) ** 2
    if degenerate:
        beta1 = beta2 = rho1 = rho3 = rho4 = rho3_q = rho3_trig = None
    else:
        beta1 = (1 - q) ** 2 / (1 + q * q)
        beta2 = -4 * (q - qi) ** 2 / (q + qi)
        rho1 = -((1 - q) ** 2) / (1 + q * q)
        rho3 = 8 * (1 - c1) ** 2 * (1 + c1) * (2 * c1 * c1 - 1) / c1
        rho4 = (
            -4 * (1 + q) ** 2 * (5 * q**4 + 2 * q**3 + 2 * q**2 + 2 * q + 5) * (q - 1) ** 4
            / ((q * q + 1) * q**4)
        )
        rho3_q = (q + qi) ** 4 * (1 + q) ** 2 / (1 + q * q)
        rho3_trig = 16 * s1**4 * (1 + 1 / c1)
    return StructureConstants(
        n=N,
        backend=bk.name,
        degenerate=degenerate,
        beta1=beta1,
        beta2=beta2,
        r1=r1,
        r2=r2,
        g1=g1,
        g2=g2,
        g3=g3,
        rho1=rho1,
        rho2=rho2,
        rho3=rho3,
        rho4=rho4,
        rho3_alt_q=rho3_q,
        rho3_alt_trig=rho3_trig,
        aw3_casimir=-2 * (q + qi),
        heun_casimir=-64 * (q - qi) ** 4,
    )


# --------------------------------------------------------------------------
# helpers
# --------------------------------------------------------------------------


def _judge(relation_id: str, bk, lhs: SquareMatrix, rhs: SquareMatrix, t0: float, **details) -> RelationReport:
    residual = lhs - rhs
    norm = residual.inf_norm()
    if bk.name == "exact":
        verdict = Verdict.EXACT_ZERO if residual.is_zero() else Verdict.FAILED
    else:
        scale = max(lhs.inf_norm(), rhs.inf_norm(), 1.0)
        verdict = Verdict.RESIDUAL_NORM if norm <= FLOAT_RTOL * scale else Verdict.FAILED
    return RelationReport(
        relation_id, bk.N, bk.name, verdict, norm, (time.perf_counter() - t0) * 1e3, dict(details)
    )


def _degenerate_report(relation_id: str, bk, reason: str) -> RelationReport:
    return RelationReport(relation_id, bk.N, bk.name, Verdict.DEGENERATE, None, 0.0, {"reason": reason})


def _conj(bk, x):
    return x.conj() if bk.name == "exact" else complex(x).conjugate()


def _inv(bk, x):
    return x.inv() if bk.name == "exact" else 1 / complex(x)


def _qcomm(p, u: SquareMatrix, v: SquareMatrix, p_inv) -> SquareMatrix:
    return u @ v * p - v @ u * p_inv


_N4_REASON = "N=4: 1+q^2, q+q^-1 and c_1 vanish"


# --------------------------------------------------------------------------
# intertwining operators
# --------------------------------------------------------------------------


def check_intertwining(
    N: int, backend="exact", *, alpha=None, beta=None, perturb=None, phi_scale=None
) -> list[RelationReport]:
    """A F - i F A and B F + i F B, with B built from (-alpha*, -beta*/q).

    Defaults to the canonical choice alpha = -i, beta = 0.  ``perturb`` adds
    1 to one entry of A and of B (``True`` or an ``(row, col)`` pair) as a
    negative control; ``phi_scale`` replaces F by a nonzero multiple.
    """
    bk = get_backend(N, backend)
    t0 = time.perf_counter()
    alpha = -bk.i if alpha is None else bk.scalar(alpha)
    beta = bk.scalar(0) if beta is None else bk.scalar(beta)
    A = intertwiner_A(N, alpha, beta, bk)
    alpha_t = -_conj(bk, alpha)
    beta_t = -_conj(bk, beta) * _inv(bk, bk.q(1))
    B = intertwiner_B(N, alpha_t, beta_t, bk)
    if perturb is not None and perturb is not False:
        pos = (0, N // 2) if perturb is True else tuple(perturb)
        bump = bk.matrix({pos: 1})
        A, B = A + bump, B + bump
    F = _scaled_dft(bk, phi_scale)
    i = bk.i
    return [
        _judge("intertwining.A", bk, A @ F, F @ A * i, t0),
        _judge("intertwining.B", bk, B @ F, F @ B * (-i), t0, b_is_a_dagger=bool((B - A.H).is_zero(1e-12))),
    ]


def _scaled_dft(bk, scale):
    F = dft(bk.N, backend=bk)
    return F if scale is None else F * bk.scalar(scale)


def _system_rows(N: int, order: int):
    """Rows of the linear system M F = i F M over cyclic tridiagonal M.

    Unknowns are ordered (a_0..a_{N-1}, b_0.., c_0..); a_k sits at (k+1, k),
    b_k at (k, k), c_k at (k, k+1).
    """
    zero = CycloScalar.from_rational(order, 0)
    q = lambda e: CycloScalar.zeta(order, (e * (order // N)) % order)  # noqa: E731
    i = CycloScalar.zeta(order, order // 4)
    A_, B_, C_ = 0, N, 2 * N
    rows = []
    for k in range(N):
        for l in range(N):
            row = [zero] * (3 * N)

            def put(idx, val):
                row[idx] = row[idx] + val

            # (M F)_kl = a_{k-1} q^{(k-1)l} + b_k q^{kl} + c_k q^{(k+1)l}
            put(A_ + (k - 1) % N, q((k - 1) * l))
            put(B_ + k, q(k * l))
            put(C_ + k, q((k + 1) * l))
            # -i (F M)_kl = -i (q^{kl} b_l + q^{k(l+1)} a_l + q^{k(l-1)} c_{l-1})
            put(B_ + l, -i * q(k * l))
            put(A_ + l, -i * q(k * (l + 1)))
            put(C_ + (l - 1) % N, -i * q(k * (l - 1)))
            rows.append(row)
    return rows, zero


def _family_vector(N: int, order: int, alpha: CycloScalar, beta: CycloScalar) -> list[CycloScalar]:
    q = lambda e: CycloScalar.zeta(order, (e * (order // N)) % order)  # noqa: E731
    i = CycloScalar.zeta(order, order // 4)
    a = [-i * alpha + beta * (i * q(-k) - q(k + 1)) for k in range(N)]
    b = [alpha * (q(k) - q(-k)) for k in range(N)]
    c = [i * alpha + beta * (q(-k) - i * q(k + 1)) for k in range(N)]
    return a + b + c


@dataclass
class IntertwinerSpace:
    n: int
    dimension: int
    family_in_kernel: bool
    family_rank: int

    @property
    def family_spans(self) -> bool:
        return self.family_in_kernel and self.family_rank == self.dimension


def intertwiner_space(N: int) -> IntertwinerSpace:
    """Exact solution space of M F = i F M over cyclic tridiagonal M.

    Works in Q(zeta_lcm(4, N)), the smallest field holding q and i.
    """
    get_backend(N, "exact")  # validates N
    order = math.lcm(4, N)
    rows, zero = _system_rows(N, order)
    ech = Echelon(3 * N, zero)
    for r in rows:
        ech.add(r)
    dim = 3 * N - ech.rank

    one = zero + 1
    fam = [_family_vector(N, order, one, zero), _family_vector(N, order, zero, one)]
    in_kernel = all(
        sum((x * y for x, y in zip(r, v) if not x.is_zero()), zero).is_zero() for r in rows for v in fam
    )
    fam_ech = Echelon(3 * N, zero)
    for v in fam:
        fam_ech.add(v)
    return IntertwinerSpace(N, dim, in_kernel, fam_ech.rank)


def intertwiner_space_dimension(N: int) -> int:
    return intertwiner_space(N).dimension


# --------------------------------------------------------------------------
# cubic algebra of A, A^T
# --------------------------------------------------------------------------


def check_cubic_algebra(N: int, backend="exact") -> list[RelationReport]:
    bk = get_backend(N, backend)
    sc = structure_constants(N, bk)
    if sc.degenerate:
        return [_degenerate_report(r, bk, _N4_REASON) for r in ("cubic.CA", "cubic.AtC")]
    t0 = time.perf_counter()
    A = canonical_A(N, bk)
    At = A.T
    C = commutator(A, At)
    b1, b2 = sc.beta1, sc.beta2
    return [
        _judge("cubic.CA", bk, commutator(C, A), A @ At @ A * b1 + A * b2 - At @ At @ At * b1, t0),
        _judge("cubic.AtC", bk, commutator(At, C), At @ A @ At * b1 + At * b2 - A @ A @ A * b1, t0),
    ]


def check_jacobi_decomposition(N: int, backend="exact") -> list[RelationReport]:
    bk = get_backend(N, backend)
    sc = structure_constants(N, bk)
    t0 = time.perf_counter()
    A = canonical_A(N, bk)
    At = A.T
    C = commutator(A, At)
    first = commutator(A, commutator(At, C))
    third = commutator(At, commutator(C, A))
    reports = []
    if sc.degenerate:
        reports += [_degenerate_report(r, bk, _N4_REASON) for r in ("jacobi.1", "jacobi.3")]
    else:
        AAt2 = (A @ At) @ (A @ At)
        AtA2 = (At @ A) @ (At @ A)
        reports.append(_judge("jacobi.1", bk, first, (AAt2 - AtA2) * sc.beta1 + C * sc.beta2, t0))
        reports.append(_judge("jacobi.3", bk, third, (AtA2 - AAt2) * sc.beta1 - C * sc.beta2, t0))
    reports.append(_judge("jacobi.13", bk, first + third, bk.zeros(), t0))
    return reports


def casimir_Q1(N: int, backend="exact"):
    """Q1 = C^2 + r1 {A^2, A^T^2} + r2 {A, A^T} - r1 (A^4 + A^T^4).

    Returns ``(Q1, reports)``; Q1 is ``None`` at N = 4.  Whether Q1 is a
    multiple of the identity is recorded in the report details.
    """
    bk = get_backend(N, backend)
    sc = structure_constants(N, bk)
    if sc.degenerate:
        return None, [_degenerate_report(r, bk, _N4_REASON) for r in ("casimir_q1.A", "casimir_q1.At")]
    t0 = time.perf_counter()
    A = canonical_A(N, bk)
    At = A.T
    C = commutator(A, At)
    A2, At2 = A @ A, At @ At
    Q1 = C @ C + anticommutator(A2, At2) * sc.r1 + anticommutator(A, At) * sc.r2 - (A2 @ A2 + At2 @ At2) * sc.r1
    scalar = Q1.entry(0, 0)
    is_scalar = (Q1 - bk.identity() * scalar).is_zero(1e-9 * max(1.0, Q1.inf_norm()))
    info = {"q1_is_scalar": bool(is_scalar), "q1_00": _cjson(scalar)}
    zero = bk.zeros()
    return Q1, [
        _judge("casimir_q1.A", bk, commutator(Q1, A), zero, t0, **info),
        _judge("casimir_q1.At", bk, commutator(Q1, At), zero, t0, **info),
    ]


# --------------------------------------------------------------------------
# Askey-Wilson algebra of X, Y (and Z)
# --------------------------------------------------------------------------


def check_AW_terwilliger(N: int, backend="exact") -> list[RelationReport]:
    """X^2 Y + Y X^2 - (q+q^-1) XYX = -(q-q^-1)^2 Y and the same with X, Y swapped."""
    bk = get_backend(N, backend)
    t0 = time.perf_counter()
    X, Y = position_X(N, bk), momentum_Y(N, bk)
    q, qi = bk.q(1), bk.q(-1)
    sum_q, diff_sq = q + qi, (q - qi) ** 2

    def lhs(U, V):
        return U @ U @ V + V @ U @ U - U @ V @ U * sum_q

    return [
        _judge("aw.XY", bk, lhs(X, Y), Y * (-diff_sq), t0),
        _judge("aw.YX", bk, lhs(Y, X), X * (-diff_sq), t0),
    ]


def check_AW3_cyclic(N: int, backend="exact") -> list[RelationReport]:
    """p XY - p^-1 YX = (q - q^-1) Z and its two cyclic shifts."""
    bk = get_backend(N, backend)
    t0 = time.perf_counter()
    X, Y, Z = position_X(N, bk), momentum_Y(N, bk), cyclic_Z(N, bk)
    p, pi = bk.p(1), bk.p(-1)
    d = bk.q(1) - bk.q(-1)
    return [
        _judge("aw3.XY", bk, _qcomm(p, X, Y, pi), Z * d, t0),
        _judge("aw3.ZX", bk, _qcomm(p, Z, X, pi), Y * d, t0),
        _judge("aw3.YZ", bk, _qcomm(p, Y, Z, pi), X * d, t0),
    ]


def check_so3q(N: int, backend="exact") -> list[RelationReport]:
    """[K0,K1]_q = K2, [K2,K0]_q = -K1, [K1,K2]_q = -K0 with [U,V]_q = p UV - p^-1 VU.

    The middle relation is the rescaled form of ``p ZX - p^-1 XZ = (q-q^-1) Y``;
    with the arguments in the order (K0, K2) it does not hold.
    """
    bk = get_backend(N, backend)
    t0 = time.perf_counter()
    K0, K1, K2 = k_generators(N, bk)
    p, pi = bk.p(1), bk.p(-1)
    return [
        _judge("so3q.K0K1", bk, _qcomm(p, K0, K1, pi), K2, t0),
        _judge("so3q.K2K0", bk, _qcomm(p, K2, K0, pi), -K1, t0),
        _judge("so3q.K1K2", bk, _qcomm(p, K1, K2, pi), -K0, t0),
    ]


def casimir_AW3(N: int, backend="exact"):
    """Q = p XYZ - q (X^2 + Z^2) - q^-1 Y^2 and its expected value -2 (q + q^-1)."""
    bk = get_backend(N, backend)
    X, Y, Z = position_X(N, bk), momentum_Y(N, bk), cyclic_Z(N, bk)
    q, qi = bk.q(1), bk.q(-1)
    Q = X @ Y @ Z * bk.p(1) - (X @ X + Z @ Z) * q - Y @ Y * qi
    return Q, -2 * (q + qi)


def check_casimir_AW3(N: int, backend="exact") -> list[RelationReport]:
    bk = get_backend(N, backend)
    t0 = time.perf_counter()
    Q, value = casimir_AW3(N, bk)
    X, Y, Z = position_X(N, bk), momentum_Y(N, bk), cyclic_Z(N, bk)
    zero = bk.zeros()
    return [
        _judge("casimir_aw3.X", bk, commutator(Q, X), zero, t0),
        _judge("casimir_aw3.Y", bk, commutator(Q, Y), zero, t0),
        _judge("casimir_aw3.Z", bk, commutator(Q, Z), zero, t0),
        _judge("casimir_aw3.hermitian", bk, Q.H, Q, t0),
        _judge("casimir_aw3.value", bk, Q, bk.identity() * value, t0, value=_cjson(value)),
    ]


# --------------------------------------------------------------------------
# Askey-Wilson-Heun algebra of X, W
# --------------------------------------------------------------------------


def check_heun_algebra(N: int, backend="exact") -> list[RelationReport]:
    """Heun relations for the pair (2X, W), W = [A, A^dagger].

    The constants g1..g3 are stated for the position generator 2X; see
    :func:`heun_constant_audit` for the residuals with X itself.
    """
    bk = get_backend(N, backend)
    sc = structure_constants(N, bk)
    t0 = time.perf_counter()
    X, W = heun_position(N, bk), heun_W(N, bk)
    sum_q = bk.q(1) + bk.q(-1)
    return [
        _judge("heun.XW", bk, X @ X @ W + W @ X @ X - X @ W @ X * sum_q, W * sc.g1, t0),
        _judge("heun.WX", bk, W @ W @ X + X @ W @ W - W @ X @ W * sum_q, X @ X @ X * sc.g2 + X * sc.g3, t0),
    ]


def _heun_casimir_matrix(X, W, rho1, rho2, rho3, rho4):
    XW, WX = X @ W, W @ X
    comm = XW - WX
    X2 = X @ X
    return comm @ comm + (XW @ XW + WX @ WX) * rho1 + W @ W * rho2 + X2 @ X2 * rho3 + X2 * rho4


def casimir_heun(N: int, backend="exact"):
    """Heun Casimir built from (2X, W) and its expected value -64 (q - q^-1)^4.

    Returns ``(None, None)`` at N = 4, where rho1, rho3 and rho4 are undefined.
    """
    bk = get_backend(N, backend)
    sc = structure_constants(N, bk)
    if sc.degenerate:
        return None, None
    X, W = heun_position(N, bk), heun_W(N, bk)
    return _heun_casimir_matrix(X, W, sc.rho1, sc.rho2, sc.rho3, sc.rho4), sc.heun_casimir


def check_casimir_heun(N: int, backend="exact") -> list[RelationReport]:
    bk = get_backend(N, backend)
    ids = ("casimir_heun.X", "casimir_heun.W", "casimir_heun.value")
    t0 = time.perf_counter()
    Q, value = casimir_heun(N, bk)
    if Q is None:
        return [_degenerate_report(r, bk, _N4_REASON) for r in ids]
    X, W = heun_position(N, bk), heun_W(N, bk)
    zero = bk.zeros()
    return [
        _judge(ids[0], bk, commutator(Q, X), zero, t0),
        _judge(ids[1], bk, commutator(Q, W), zero, t0),
        _judge(ids[2], bk, Q, bk.identity() * value, t0, value=_cjson(value)),
    ]


# --------------------------------------------------------------------------
# commutation with the DFT and with the reflection
# --------------------------------------------------------------------------


def check_commuting_with_dft(N: int, backend="exact", *, phi_scale=None) -> list[RelationReport]:
    bk = get_backend(N, backend)
    t0 = time.perf_counter()
    W, F = heun_W(N, bk), _scaled_dft(bk, phi_scale)
    A = canonical_A(N, bk)
    AdA = A.H @ A
    P = reflection_Pd(N, bk)
    return [
        _judge("dft_commute.W", bk, W @ F, F @ W, t0),
        _judge("dft_commute.AdA_Pd", bk, AdA @ P, P @ AdA, t0),
    ]


def dft_negative_control(N: int, backend="exact") -> RelationReport:
    """[X, F] = 0 is false; the report is expected to fail."""
    bk = get_backend(N, backend)
    t0 = time.perf_counter()
    X, F = position_X(N, bk), dft(N, backend=bk)
    return _judge("negative.X_F", bk, X @ F, F @ X, t0)


# --------------------------------------------------------------------------
# audit of alternative constants
# --------------------------------------------------------------------------


def heun_constant_audit(N: int, backend="exact") -> list[dict]:
    """Residuals of the Heun and so3(q) relations, adopted forms next to rejected alternatives.

    Each entry is ``{variant, relation, exact_zero, residual_inf_norm}``.
    ``exact_zero`` is None in the float backend.
    """
    bk = get_backend(N, backend)
    sc = structure_constants(N, bk)
    X1, X2, W = position_X(N, bk), heun_position(N, bk), heun_W(N, bk)
    sum_q = bk.q(1) + bk.q(-1)
    out = []

    def record(variant, relation, residual):
        out.append(
            {
                "n": N,
                "backend": bk.name,
                "variant": variant,
                "relation": relation,
                "exact_zero": residual.is_zero() if bk.name == "exact" else None,
                "residual_inf_norm": residual.inf_norm(),
            }
        )

    for label, X in (("X", X1), ("2X", X2)):
        record(f"position={label}", "heun.XW", X @ X @ W + W @ X @ X - X @ W @ X * sum_q - W * sc.g1)
        record(
            f"position={label}",
            "heun.WX",
            W @ W @ X + X @ W @ W - W @ X @ W * sum_q - X @ X @ X * sc.g2 - X * sc.g3,
        )
    if not sc.degenerate:
        I = bk.identity()
        for label, rho3 in (("rho3=corrected", sc.rho3), ("rho3=alt_q", sc.rho3_alt_q), ("rho3=alt_trig", sc.rho3_alt_trig)):
            Q = _heun_casimir_matrix(X2, W, sc.rho1, sc.rho2, rho3, sc.rho4)
            record(label, "casimir_heun.W", commutator(Q, W))
            record(label, "casimir_heun.value", Q - I * sc.heun_casimir)
    K0, K1, K2 = k_generators(N, bk)
    p, pi = bk.p(1), bk.p(-1)
    record("order=(K0,K2)", "so3q.middle", _qcomm(p, K0, K2, pi) + K1)
    record("order=(K2,K0)", "so3q.middle", _qcomm(p, K2, K0, pi) + K1)
    return out


def _cjson(v):
    if v is None:
        return None
    if isinstance(v, CycloScalar):
        z = complex(v)
        return {"re": z.real, "im": z.imag, **v.to_json()}
    z = complex(v)
    return {"re": z.real, "im": z.imag}


# --------------------------------------------------------------------------
# group registry used by the CLI
# --------------------------------------------------------------------------


def _casimir_q1_reports(N, backend):
    return casimir_Q1(N, backend)[1]


RELATION_GROUPS = {
    "intertwining": check_intertwining,
    "cubic": check_cubic_algebra,
    "jacobi": check_jacobi_decomposition,
    "casimir_q1": _casimir_q1_reports,
    "aw": check_AW_terwilliger,
    "aw3": check_AW3_cyclic,
    "so3q": check_so3q,
    "casimir_aw3": check_casimir_AW3,
    "heun": check_heun_algebra,
    "casimir_heun": check_casimir_heun,
    "dft_commute": check_commuting_with_dft,
}
