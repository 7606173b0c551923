"""Pure-Python (numpy-vectorized) versions of the compiled kernels.

Same algorithms as ``_kernels.pyx``: direct transform for tiny sizes,
iterative radix-2 Cooley-Tukey for powers of two, Bluestein otherwise.
The batch dimension is vectorized; the butterfly stages are a Python loop.
"""
import numpy as np

DIRECT_MAX = 16


def _next_pow2(n):
    L = 1
    while L < n:
        L <<= 1
    return L


def _bitrev(L):
    bits = L.bit_length() - 1
    idx = np.arange(L)
    rev = np.zeros(L, dtype=np.intp)
    for b in range(bits):
        rev |= ((idx >> b) & 1) << (bits - 1 - b)
    return rev


def _fft_pow2(a, sign):
    # a: (m, L) complex, transformed along axis 1; returns a new array.
    m, L = a.shape
    if L == 1:
        return a.copy()
    k = np.arange(L // 2)
    tw = np.cos(2.0 * np.pi * k / L) - 1j * np.sin(2.0 * np.pi * k / L)
    if sign > 0:
        tw = tw.conj()
    a = a[:, _bitrev(L)]
    size = 2
    while size <= L:
        half = size // 2
        blocks = a.reshape(m, L // size, size)
        w = tw[:: L // size][:half]
        even = blocks[:, :, :half]
        odd = blocks[:, :, half:] * w
        a = np.concatenate((even + odd, even - odd), axis=2).reshape(m, L)
        size *= 2
    return a


def dft_rows(x, inverse):
    """Unnormalized DFT of every row of a 2-D complex array."""
    x = np.ascontiguousarray(x, dtype=np.complex128)
    m, n = x.shape
    if n == 0:
        raise ValueError("empty transform")
    sign = 1 if inverse else -1

    if n <= DIRECT_MAX:
        k = np.arange(n)
        e = np.outer(k, k) % n
        W = np.cos(2.0 * np.pi * e / n) + sign * 1j * np.sin(2.0 * np.pi * e / n)
        return x @ W

    L = _next_pow2(n)
    if L == n:
        return _fft_pow2(x, sign)

    L = _next_pow2(2 * n - 1)
    k = np.arange(n)
    e = (k * k) % (2 * n)
    chirp = np.cos(np.pi * e / n) + sign * 1j * np.sin(np.pi * e / n)
    kern = np.zeros((1, L), dtype=np.complex128)
    kern[0, :n] = chirp.conj()
    kern[0, L - n + 1:] = chirp[1:][::-1].conj()
    kern = _fft_pow2(kern, -1)
    work = np.zeros((m, L), dtype=np.complex128)
    work[:, :n] = x * chirp
    work = _fft_pow2(work, -1) * kern
    work = _fft_pow2(work, 1)
    return work[:, :n] * chirp / L


def toeplitz_fill(coeffs, n):
    """Dense ``T[s, t] = coeffs[s - t + n - 1]`` for a length ``2n-1`` table."""
    coeffs = np.ascontiguousarray(coeffs, dtype=np.float64)
    if coeffs.shape[0] != 2 * n - 1:
        raise ValueError("coefficient table must have length 2n-1")
    idx = np.arange(n)[:, None] - np.arange(n)[None, :] + n - 1
    return coeffs[idx]
