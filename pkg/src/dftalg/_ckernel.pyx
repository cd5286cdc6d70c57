# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel: matrix product over Z[zeta_M] on int64 coefficient tensors.

Every multiply and add is overflow-checked; on overflow OverflowError is
raised and the caller retries with arbitrary-precision integers.
"""
import numpy as np
from libc.stdint cimport int64_t

cdef extern from *:
    """
    static inline int dft_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int dft_add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    """
    int dft_mul_ovf(long long a, long long b, long long *r) nogil
    int dft_add_ovf(long long a, long long b, long long *r) nogil


def cyclo_matmul(const int64_t[:, :, ::1] a, const int64_t[:, :, ::1] b,
                 const int64_t[:, ::1] red):
    """C[i,j] = sum_k A[i,k] * B[k,j], each entry a length-d coefficient row.

    ``red`` holds the reduced images of x^e for e < 2d - 1.
    """
    cdef Py_ssize_t n = a.shape[0], m = a.shape[1], p = b.shape[1], d = a.shape[2]
    if b.shape[0] != m or b.shape[2] != d:
        raise ValueError("shape mismatch")
    if red.shape[0] != 2 * d - 1 or red.shape[1] != d:
        raise ValueError("reduction table has the wrong shape")
    out = np.zeros((n, p, d), dtype=np.int64)
    cdef int64_t[:, :, ::1] c = out
    acc_arr = np.zeros(2 * d - 1, dtype=np.int64)
    cdef int64_t[::1] acc = acc_arr
    a_nz_arr = np.zeros((n, m), dtype=np.uint8)
    b_nz_arr = np.zeros((m, p), dtype=np.uint8)
    cdef unsigned char[:, ::1] a_nz = a_nz_arr
    cdef unsigned char[:, ::1] b_nz = b_nz_arr
    cdef Py_ssize_t i, j, k, s, t, e
    cdef long long prod, tmp
    cdef int overflow = 0

    with nogil:
        for i in range(n):
            for k in range(m):
                for s in range(d):
                    if a[i, k, s] != 0:
                        a_nz[i, k] = 1
                        break
        for k in range(m):
            for j in range(p):
                for s in range(d):
                    if b[k, j, s] != 0:
                        b_nz[k, j] = 1
                        break
        for i in range(n):
            if overflow:
                break
            for j in range(p):
                for e in range(2 * d - 1):
                    acc[e] = 0
                for k in range(m):
                    if not a_nz[i, k] or not b_nz[k, j]:
                        continue
                    for s in range(d):
                        if a[i, k, s] == 0:
                            continue
                        for t in range(d):
                            if b[k, j, t] == 0:
                                continue
                            if dft_mul_ovf(a[i, k, s], b[k, j, t], &prod):
                                overflow = 1
                            if dft_add_ovf(acc[s + t], prod, &tmp):
                                overflow = 1
                            acc[s + t] = tmp
                for e in range(2 * d - 1):
                    if acc[e] == 0:
                        continue
                    for t in range(d):
                        if red[e, t] == 0:
                            continue
                        if dft_mul_ovf(acc[e], red[e, t], &prod):
                            overflow = 1
                        if dft_add_ovf(c[i, j, t], prod, &tmp):
                            overflow = 1
                        c[i, j, t] = tmp
                if overflow:
                    break
    if overflow:
        raise OverflowError("int64 overflow in cyclotomic matrix product")
    return out
