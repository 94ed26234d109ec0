# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels: small complex determinants,
all-minors (Pluecker) vectors, and Gram determinants of frames.

Semantically identical to ``_kernels_py``; see that module for docs.
"""

from libc.stdlib cimport free, malloc

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND = "compiled"


cdef double complex _det_inplace(double complex *a, Py_ssize_t k) nogil:
    """LU determinant with partial pivoting; clobbers the k*k buffer ``a``."""
    cdef Py_ssize_t i, j, p, piv
    cdef double best, cand
    cdef double complex tmp, factor, result
    result = 1.0 + 0.0j
    for p in range(k):
        piv = p
        best = a[p * k + p].real * a[p * k + p].real + a[p * k + p].imag * a[p * k + p].imag
        for i in range(p + 1, k):
            cand = a[i * k + p].real * a[i * k + p].real + a[i * k + p].imag * a[i * k + p].imag
            if cand > best:
                best = cand
                piv = i
        if best == 0.0:
            return 0.0 + 0.0j
        if piv != p:
            result = -result
            for j in range(p, k):
                tmp = a[p * k + j]
                a[p * k + j] = a[piv * k + j]
                a[piv * k + j] = tmp
        result = result * a[p * k + p]
        for i in range(p + 1, k):
            factor = a[i * k + p] / a[p * k + p]
            for j in range(p + 1, k):
                a[i * k + j] = a[i * k + j] - factor * a[p * k + j]
    return result


def det(a):
    """Determinant of a small square complex matrix."""
    cdef cnp.ndarray[cnp.complex128_t, ndim=2, mode="c"] arr = np.ascontiguousarray(a, dtype=np.complex128)
    cdef Py_ssize_t k = arr.shape[0]
    if arr.shape[1] != k:
        raise ValueError("square matrix required")
    if k == 0:
        return 1.0 + 0.0j
    cdef double complex *buf = <double complex *> malloc(k * k * sizeof(double complex))
    if buf is NULL:
        raise MemoryError
    cdef Py_ssize_t i, j
    cdef double complex out
    for i in range(k):
        for j in range(k):
            buf[i * k + j] = arr[i, j]
    with nogil:
        out = _det_inplace(buf, k)
    free(buf)
    return complex(out)


def minor_vector(a):
    """All n-by-n minors of an n-by-N matrix, in lexicographic column order."""
    cdef cnp.ndarray[cnp.complex128_t, ndim=2, mode="c"] arr = np.ascontiguousarray(a, dtype=np.complex128)
    cdef Py_ssize_t n = arr.shape[0]
    cdef Py_ssize_t big_n = arr.shape[1]
    if n > big_n:
        raise ValueError("frame has more rows than columns")
    cdef cnp.ndarray[cnp.intp_t, ndim=1] idx = np.arange(n, dtype=np.intp)
    cdef Py_ssize_t total = 1
    cdef Py_ssize_t i, j, pos
    # C(big_n, n) without overflow worries at the sizes we address.
    for i in range(n):
        total = total * (big_n - i) // (i + 1)
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] out = np.empty(total, dtype=np.complex128)
    cdef double complex *buf = <double complex *> malloc(n * n * sizeof(double complex))
    if buf is NULL:
        raise MemoryError
    cdef Py_ssize_t which = 0
    while True:
        for i in range(n):
            for j in range(n):
                buf[i * n + j] = arr[i, idx[j]]
        out[which] = _det_inplace(buf, n)
        which += 1
        # lexicographic successor of the combination in ``idx``
        pos = n - 1
        while pos >= 0 and idx[pos] == big_n - n + pos:
            pos -= 1
        if pos < 0:
            break
        idx[pos] += 1
        for i in range(pos + 1, n):
            idx[i] = idx[i - 1] + 1
    free(buf)
    return out


def gram_det(a, b):
    """det(a b^H): Gram determinant of two n-by-N frames."""
    cdef cnp.ndarray[cnp.complex128_t, ndim=2, mode="c"] fa = np.ascontiguousarray(a, dtype=np.complex128)
    cdef cnp.ndarray[cnp.complex128_t, ndim=2, mode="c"] fb = np.ascontiguousarray(b, dtype=np.complex128)
    cdef Py_ssize_t n = fa.shape[0]
    cdef Py_ssize_t big_n = fa.shape[1]
    if fb.shape[0] != n or fb.shape[1] != big_n:
        raise ValueError("frames must share a shape")
    cdef double complex *buf = <double complex *> malloc(n * n * sizeof(double complex))
    if buf is NULL:
        raise MemoryError
    cdef Py_ssize_t i, j, t
    cdef double complex acc
    cdef double complex out
    with nogil:
        for i in range(n):
            for j in range(n):
                acc = 0.0 + 0.0j
                for t in range(big_n):
                    acc = acc + fa[i, t] * fb[j, t].conjugate()
                buf[i * n + j] = acc
        out = _det_inplace(buf, n)
    free(buf)
    return complex(out)


def frame_norm(a):
    """sqrt(det(a a^H)): norm of the top exterior power of the rows."""
    cdef double g = gram_det(a, a).real
    if g < 0.0:
        g = 0.0
    return float(g ** 0.5)
