# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: arbitrary-length DFT (radix-2 + Bluestein) and Toeplitz fill.

Both routines mirror :mod:`symtoep._core._fallback` exactly in algorithm and
convention; only the execution model differs.
"""
import numpy as np
cimport numpy as cnp
from libc.math cimport cos, sin, M_PI

cnp.import_array()

ctypedef double complex cplx

cdef Py_ssize_t DIRECT_MAX = 16


cdef Py_ssize_t _next_pow2(Py_ssize_t n) nogil:
    cdef Py_ssize_t L = 1
    while L < n:
        L <<= 1
    return L


cdef void _fft_pow2(cplx* a, Py_ssize_t L, const cplx* tw, int sign) noexcept nogil:
    # In-place iterative Cooley-Tukey; tw[k] = exp(-2*pi*i*k/L), k < L/2.
    cdef Py_ssize_t i, j, k, bit, size, half, step, start
    cdef cplx t, u, w
    j = 0
    for i in range(1, L):
        bit = L >> 1
        while j & bit:
            j ^= bit
            bit >>= 1
        j |= bit
        if i < j:
            t = a[i]
            a[i] = a[j]
            a[j] = t
    size = 2
    while size <= L:
        half = size >> 1
        step = L // size
        start = 0
        while start < L:
            for k in range(half):
                w = tw[k * step]
                if sign > 0:
                    w = w.conjugate()
                u = a[start + k]
                t = a[start + k + half] * w
                a[start + k] = u + t
                a[start + k + half] = u - t
            start += size
        size <<= 1


def dft_rows(cnp.ndarray x_in, bint inverse):
    """Unnormalized DFT of every row of a 2-D complex array.

    Forward uses ``exp(-2*pi*i*jk/n)``, inverse ``exp(+2*pi*i*jk/n)``; the
    caller applies the ``1/n`` factor.
    """
    cdef cnp.ndarray[cplx, ndim=2, mode="c"] x = np.ascontiguousarray(x_in, dtype=np.complex128)
    cdef Py_ssize_t m = x.shape[0]
    cdef Py_ssize_t n = x.shape[1]
    cdef cnp.ndarray[cplx, ndim=2, mode="c"] out = np.empty((m, n), dtype=np.complex128)
    cdef int sign = 1 if inverse else -1
    cdef Py_ssize_t r, j, k, L
    cdef cplx acc
    cdef cnp.ndarray[cplx, ndim=1] roots, tw, chirp, kern, work
    if n == 0:
        raise ValueError("empty transform")

    if n <= DIRECT_MAX:
        roots = np.empty(n, dtype=np.complex128)
        for k in range(n):
            roots[k] = cos(2.0 * M_PI * k / n) + sign * 1j * sin(2.0 * M_PI * k / n)
        for r in range(m):
            for k in range(n):
                acc = 0
                for j in range(n):
                    acc = acc + x[r, j] * roots[(j * k) % n]
                out[r, k] = acc
        return out

    L = _next_pow2(n)
    if L == n:
        tw = np.empty(L // 2, dtype=np.complex128)
        for k in range(L // 2):
            tw[k] = cos(2.0 * M_PI * k / L) - 1j * sin(2.0 * M_PI * k / L)
        out[:, :] = x
        with nogil:
            for r in range(m):
                _fft_pow2(&out[r, 0], L, &tw[0], sign)
        return out

    # Bluestein: jk = (j^2 + k^2 - (k-j)^2)/2, chirp exponent j^2 reduced mod 2n.
    L = _next_pow2(2 * n - 1)
    tw = np.empty(L // 2, dtype=np.complex128)
    for k in range(L // 2):
        tw[k] = cos(2.0 * M_PI * k / L) - 1j * sin(2.0 * M_PI * k / L)
    chirp = np.empty(n, dtype=np.complex128)
    for k in range(n):
        j = (k * k) % (2 * n)
        chirp[k] = cos(M_PI * j / n) + sign * 1j * sin(M_PI * j / n)
    kern = np.zeros(L, dtype=np.complex128)
    for k in range(n):
        kern[k] = chirp[k].conjugate()
    for k in range(1, n):
        kern[L - k] = chirp[k].conjugate()
    _fft_pow2(&kern[0], L, &tw[0], -1)
    work = np.empty(L, dtype=np.complex128)
    with nogil:
        for r in range(m):
            for k in range(n):
                work[k] = x[r, k] * chirp[k]
            for k in range(n, L):
                work[k] = 0
            _fft_pow2(&work[0], L, &tw[0], -1)
            for k in range(L):
                work[k] = work[k] * kern[k]
            _fft_pow2(&work[0], L, &tw[0], 1)
            for k in range(n):
                out[r, k] = work[k] * chirp[k] / L
    return out


def toeplitz_fill(cnp.ndarray coeffs_in, Py_ssize_t n):
    """Dense ``T[s, t] = coeffs[s - t + n - 1]`` for a length ``2n-1`` table."""
    cdef cnp.ndarray[double, ndim=1] coeffs = np.ascontiguousarray(coeffs_in, dtype=np.float64)
    cdef cnp.ndarray[double, ndim=2, mode="c"] out = np.empty((n, n), dtype=np.float64)
    cdef Py_ssize_t s, t
    if coeffs.shape[0] != 2 * n - 1:
        raise ValueError("coefficient table must have length 2n-1")
    with nogil:
        for s in range(n):
            for t in range(n):
                out[s, t] = coeffs[s - t + n - 1]
    return out
