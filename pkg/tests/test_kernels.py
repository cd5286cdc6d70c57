import numpy as np
import pytest

from dftalg import _kernels, _pykernel
from dftalg.cyclo import CycloScalar, get_field
from dftalg.matrix import ExactMatrix

needs_compiled = pytest.mark.skipif(not _kernels.HAVE_COMPILED, reason="compiled kernel not built")


def _random_tensor(rng, n, d, span):
    out = np.empty((n, n, d), dtype=object)
    out[...] = rng.integers(-span, span + 1, size=(n, n, d)).tolist()
    return out


@pytest.mark.parametrize("M", [8, 12, 20, 24, 32])
def test_pure_kernel_matches_scalar_products(M):
    f = get_field(M)
    rng = np.random.default_rng(M)
    a = _random_tensor(rng, 3, f.degree, 5)
    b = _random_tensor(rng, 3, f.degree, 5)
    got = _pykernel.cyclo_matmul(a, b, f.reduction)
    for i in range(3):
        for j in range(3):
            want = sum(
                (CycloScalar(M, list(a[i, k])) * CycloScalar(M, list(b[k, j])) for k in range(3)),
                CycloScalar.from_rational(M, 0),
            )
            assert CycloScalar(M, list(got[i, j])) == want


@needs_compiled
@pytest.mark.parametrize("M", [8, 12, 20, 24, 32])
@pytest.mark.parametrize("n", [1, 4, 9])
def test_compiled_equals_pure(M, n):
    f = get_field(M)
    rng = np.random.default_rng(100 * M + n)
    a = _random_tensor(rng, n, f.degree, 1000)
    b = _random_tensor(rng, n, f.degree, 1000)
    fast = _kernels.cyclo_matmul(a, b, f.reduction, use_compiled=True)
    slow = _kernels.cyclo_matmul(a, b, f.reduction, use_compiled=False)
    assert fast.dtype == object
    assert (fast == slow).all()


@needs_compiled
def test_overflow_falls_back_to_big_integers():
    f = get_field(20)
    big = 2**40
    a = np.empty((2, 2, f.degree), dtype=object)
    a[...] = big
    got = _kernels.cyclo_matmul(a, a, f.reduction, use_compiled=True)
    want = _pykernel.cyclo_matmul(a, a, f.reduction)
    assert (got == want).all()
    assert max(abs(int(x)) for x in got.ravel()) > 2**63


def test_exact_matmul_overflow_path_is_exact():
    f = get_field(12)
    huge = CycloScalar(12, [2**70, -(2**65), 3, 1])
    m = ExactMatrix.from_entries(f, 2, {(0, 0): huge, (1, 1): huge, (0, 1): 1})
    sq = m @ m
    assert sq.entry(0, 0) == huge * huge
    assert sq.entry(0, 1) == huge + huge


def test_kernel_name():
    assert _kernels.KERNEL in ("cython", "python")
    assert _kernels.HAVE_COMPILED == (_kernels.KERNEL == "cython")
