"""Discrete Fourier transform and circulant diagonalization.

Conventions used everywhere in the package:

* forward ``X_k = sum_j x_j exp(-2 pi i jk/n)`` (unnormalized),
* inverse ``x_j = (1/n) sum_k X_k exp(+2 pi i jk/n)``.

A circulant ``C`` with first column ``c`` satisfies ``C = F diag(lam) F*``
with ``F[j, k] = exp(-2 pi i jk/n)/sqrt(n)`` and ``lam = circulant_eigs(c)``,
so ``C @ x == dft(lam * dft(x, inverse=True))``.
"""
import numpy as np

from . import _core


def _as_vector(x):
    x = np.asarray(x, dtype=np.complex128)
    if x.ndim != 1:
        raise ValueError(f"expected a 1-D vector, got shape {x.shape}")
    if x.size == 0:
        raise ValueError("empty input")
    if not np.all(np.isfinite(x)):
        raise ValueError("non-finite entries")
    return x


def dft(x, inverse=False):
    """Transform a vector of any length ``n >= 1``.

    Non-power-of-two lengths (including primes such as 157 and 589) go
    through Bluestein's chirp-z reformulation.
    """
    x = _as_vector(x)
    out = _core.dft_rows(x[None, :], bool(inverse))[0]
    if inverse:
        out /= x.size
    return out


def dft_columns(X, inverse=False):
    """Apply :func:`dft` to every column of a 2-D array."""
    X = np.asarray(X, dtype=np.complex128)
    if X.ndim != 2 or X.shape[0] == 0:
        raise ValueError(f"expected a non-empty 2-D array, got shape {X.shape}")
    out = _core.dft_rows(np.ascontiguousarray(X.T), bool(inverse)).T
    if inverse:
        out /= X.shape[0]
    return np.ascontiguousarray(out)


def circulant_eigs(first_column):
    """Eigenvalues ``lam_k = sum_l c_l exp(+2 pi i lk/n)`` of a circulant.

    ``lam_k`` belongs to the eigenvector with components
    ``exp(-2 pi i jk/n)/sqrt(n)``, i.e. column ``k`` of the Fourier matrix.
    """
    c = _as_vector(first_column)
    return c.size * dft(c, inverse=True)


def circulant_dense(first_column):
    """Dense circulant with the given first column (``C[j, l] = c[(j-l) mod n]``)."""
    c = np.asarray(first_column)
    n = c.size
    idx = (np.arange(n)[:, None] - np.arange(n)[None, :]) % n
    return c[idx]
