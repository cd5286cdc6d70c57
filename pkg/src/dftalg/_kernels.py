"""Kernel selection.

The compiled extension is used when it imports and ``DFTALG_PURE_PYTHON`` is
unset; it works on int64 and raises on overflow, in which case the product
is redone with Python integers.
"""
import os

import numpy as np

from . import _pykernel

try:
    if os.environ.get("DFTALG_PURE_PYTHON"):
        raise ImportError("pure-Python kernels requested")
    from . import _ckernel
except ImportError:
    _ckernel = None

HAVE_COMPILED = _ckernel is not None
KERNEL = "cython" if HAVE_COMPILED else "python"


def cyclo_matmul(a: np.ndarray, b: np.ndarray, red: np.ndarray, *, use_compiled: bool | None = None) -> np.ndarray:
    """Product of coefficient tensors of shapes (n, m, d) and (m, p, d); returns an object array."""
    if use_compiled is None:
        use_compiled = HAVE_COMPILED
    if use_compiled:
        if _ckernel is None:
            raise RuntimeError("compiled kernel is not available")
        try:
            a64 = np.ascontiguousarray(a, dtype=np.int64)
            b64 = np.ascontiguousarray(b, dtype=np.int64)
            out = _ckernel.cyclo_matmul(a64, b64, np.ascontiguousarray(red, dtype=np.int64))
            return out.astype(object)
        except OverflowError:
            pass
    return _pykernel.cyclo_matmul(np.asarray(a, dtype=object), np.asarray(b, dtype=object), red)
