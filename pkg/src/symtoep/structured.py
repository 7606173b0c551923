"""Dense Toeplitz, Hankel, flip and circulant-column constructions.

Orientation: ``T[s, t] = a_{s-t}``, so the first column of ``T_n[f]`` holds
``a_0 .. a_{n-1}`` and the first row ``a_0, a_{-1}, ..``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _core
from .symbols import MatrixSymbol, ScalarSymbol
from .transforms import circulant_eigs


def _check_n(n):
    if int(n) != n or n < 1:
        raise ValueError(f"size must be a positive integer, got {n!r}")
    return int(n)


def coefficient_window(sym: ScalarSymbol, n: int) -> np.ndarray:
    """``a_{-(n-1)} .. a_{n-1}`` as a length ``2n-1`` array."""
    return np.asarray(sym.coefficients(np.arange(-(n - 1), n)), dtype=np.float64)


def build_toeplitz(sym: ScalarSymbol, n: int) -> np.ndarray:
    n = _check_n(n)
    # toeplitz_fill indexes table[s - t + n - 1] == a_{s-t}
    return _core.toeplitz_fill(coefficient_window(sym, n), n)


def flip_left(M) -> np.ndarray:
    """``Y @ M``: rows in reverse order."""
    return np.ascontiguousarray(np.asarray(M)[::-1, :])


def exchange(n: int) -> np.ndarray:
    """The anti-identity ``Y_n``."""
    return flip_left(np.eye(_check_n(n)))


def build_hankel(sym: ScalarSymbol, sign: str, nu: int) -> np.ndarray:
    """``H[i, j] = a_{i+j+1}`` (sign ``'+'``) or ``a_{-(i+j+1)}`` (sign ``'-'``), 0-based."""
    nu = _check_n(nu)
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    ks = np.arange(1, 2 * nu)
    if sign == "-":
        ks = -ks
    a = np.asarray(sym.coefficients(ks), dtype=np.float64)
    idx = np.arange(nu)[:, None] + np.arange(nu)[None, :]
    return a[idx]


def decompose_even(sym: ScalarSymbol, n: int):
    """The four ``nu x nu`` blocks of ``Y_n T_n[f]`` for ``n = 2 nu``.

    Returns ``(Y H[f,+] Y, Y T_nu, Y T_nu, H[f,-])`` in row-major block order.
    """
    n = _check_n(n)
    if n % 2:
        raise ValueError("decompose_even requires an even size")
    nu = n // 2
    hp = build_hankel(sym, "+", nu)
    yty = np.ascontiguousarray(hp[::-1, ::-1])
    yt = flip_left(build_toeplitz(sym, nu))
    return yty, yt, yt.copy(), build_hankel(sym, "-", nu)


def assemble_blocks(blocks) -> np.ndarray:
    tl, tr, bl, br = blocks
    return np.block([[tl, tr], [bl, br]])


def build_block_toeplitz(msym: MatrixSymbol, n: int) -> np.ndarray:
    """``sn x sn`` block Toeplitz matrix with block ``(p, q) = A_{p-q}``."""
    n = _check_n(n)
    s = msym.s
    ks = np.arange(-(n - 1), n)
    msym.check_hermitian_coefficients(n - 1)
    blocks = msym.coefficient_blocks(ks)
    idx = np.arange(n)[:, None] - np.arange(n)[None, :] + n - 1
    # (n, n, s, s) -> (n, s, n, s)
    return np.ascontiguousarray(blocks[idx].transpose(0, 2, 1, 3).reshape(n * s, n * s))


def flip_kron_left(M, s: int) -> np.ndarray:
    """``(Y_n kron I_s) @ M``: reverse the order of the ``s``-row blocks."""
    M = np.asarray(M)
    s = _check_n(s)
    if M.shape[0] % s:
        raise ValueError("row count is not a multiple of the block size")
    nb = M.shape[0] // s
    return np.ascontiguousarray(M.reshape(nb, s, -1)[::-1].reshape(M.shape))


@dataclass(frozen=True, eq=False)
class CirculantSpec:
    """Circulant given by its first column, with cached eigenvalues."""

    first_column: np.ndarray
    eigs: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        c = np.asarray(self.first_column, dtype=np.float64).copy()
        if c.ndim != 1 or c.size == 0:
            raise ValueError("first column must be a non-empty vector")
        c.setflags(write=False)
        lam = circulant_eigs(c)
        lam.setflags(write=False)
        object.__setattr__(self, "first_column", c)
        object.__setattr__(self, "eigs", lam)

    @property
    def n(self) -> int:
        return self.first_column.size


def strang_column(sym: ScalarSymbol, n: int) -> CirculantSpec:
    """Strang circulant: ``c_j = a_j`` for ``j <= n//2``, ``c_j = a_{j-n}`` beyond.

    For even ``n`` the middle entry takes ``a_{n/2}``.
    """
    n = _check_n(n)
    j = np.arange(n)
    ks = np.where(j <= n // 2, j, j - n)
    return CirculantSpec(sym.coefficients(ks))


def chan_optimal_column(sym: ScalarSymbol, n: int) -> CirculantSpec:
    """Frobenius-optimal circulant: ``c_j = ((n-j) a_j + j a_{j-n}) / n``."""
    n = _check_n(n)
    j = np.arange(n)
    c = ((n - j) * sym.coefficients(j) + j * sym.coefficients(j - n)) / n
    return CirculantSpec(c)


CIRCULANTS = {"strang": strang_column, "chan": chan_optimal_column}


def circulant_column(sym: ScalarSymbol, n: int, kind: str) -> CirculantSpec:
    try:
        return CIRCULANTS[kind](sym, n)
    except KeyError:
        raise ValueError(f"unknown circulant kind {kind!r}") from None


def write_matrix_csv(M, path) -> None:
    """One row per line, entries in 17-significant-digit scientific notation."""
    M = np.atleast_2d(np.asarray(M))
    with open(path, "w", encoding="utf-8") as fh:
        for row in M:
            fh.write(",".join(format(float(x), ".16e") for x in row))
            fh.write("\n")
