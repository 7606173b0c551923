"""Absolute-value circulant preconditioning of ``Y_n T_n[f]``.

``|C| = F |Lambda| F*`` shares the Fourier eigenvectors of ``C``. All
applications go through :func:`symtoep.transforms.dft_columns`, so an
operator ``F diag(d) F*`` acts on ``X`` as ``dft(d * idft(X))`` column-wise.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .spectral import singular_values, sym_eigs, symmetrize
from .structured import CirculantSpec, build_toeplitz, circulant_column, flip_left
from .transforms import dft_columns

DEFAULT_PINV_TOL = 1e-10


class SingularPreconditionerError(ArithmeticError):
    """Every circulant eigenvalue is below the pseudo-inverse threshold."""


def abs_circulant_eigs(c: CirculantSpec) -> np.ndarray:
    """``|lambda_k|``, index-aligned with the Fourier basis."""
    return np.abs(c.eigs)


def _kept_modes(lam_abs, zero_tol):
    top = lam_abs.max(initial=0.0)
    keep = lam_abs > zero_tol * top
    if top == 0.0 or not keep.any():
        raise SingularPreconditionerError("all circulant eigenvalues vanish")
    return keep


def _apply_fourier_diag(d, X, side, real_check=True):
    X = np.asarray(X)
    vec = X.ndim == 1
    X2 = X[:, None] if vec else X
    if side == "right":
        # X A = (A^T X^T)^T; A = F diag(d) F* has A^T = F diag(d') F* with d'_k = d_{-k}
        d = np.roll(d[::-1], 1)
        X2 = X2.T
    elif side != "left":
        raise ValueError("side must be 'left' or 'right'")
    Y = dft_columns(d[:, None] * dft_columns(X2, inverse=True))
    if side == "right":
        Y = Y.T
    if real_check and np.isrealobj(X):
        resid = np.abs(Y.imag).max(initial=0.0)
        scale = np.linalg.norm(X2)
        if resid > 1e-10 * max(scale, np.finfo(float).tiny):
            raise FloatingPointError(f"imaginary residue {resid:.3e} in a real application")
        Y = Y.real
    return Y[:, 0] if vec else Y


def apply_abs_power(c: CirculantSpec, X, power: float, zero_tol=DEFAULT_PINV_TOL,
                    side="left") -> np.ndarray:
    """Apply ``|C|^power`` (pseudo-inverse on vanishing modes for negative powers)."""
    lam = abs_circulant_eigs(c)
    keep = _kept_modes(lam, zero_tol)
    d = np.zeros_like(lam)
    d[keep] = lam[keep] ** power
    return _apply_fourier_diag(d, X, side)


def apply_abs_inv_sqrt(c: CirculantSpec, X, zero_tol=DEFAULT_PINV_TOL, side="left") -> np.ndarray:
    """``|C|^{-1/2} X`` (``side='left'``) or ``X |C|^{-1/2}`` (``side='right'``).

    Modes with ``|lambda_k| <= zero_tol * max|lambda|`` are dropped.
    """
    return apply_abs_power(c, X, -0.5, zero_tol, side)


def apply_circulant_pinv(c: CirculantSpec, X, zero_tol=DEFAULT_PINV_TOL) -> np.ndarray:
    """``C^+ X`` with ``C^+ = F diag(1/lambda_k on kept modes) F*``."""
    lam = c.eigs
    keep = _kept_modes(np.abs(lam), zero_tol)
    d = np.zeros_like(lam)
    d[keep] = 1.0 / lam[keep]
    return _apply_fourier_diag(d, X, "left")


def abs_circulant_dense(c: CirculantSpec) -> np.ndarray:
    """Densified ``|C|`` (diagnostics and tests only)."""
    return apply_abs_power(c, np.eye(c.n), 1.0, zero_tol=0.0)


def symmetric_preconditioned(sym, n: int, circulant_kind: str = "strang",
                             zero_tol=DEFAULT_PINV_TOL):
    """``S = |C|^{-1/2} (Y T) |C|^{-1/2}`` together with ``Y T`` and ``C``."""
    yt = flip_left(build_toeplitz(sym, n))
    c = circulant_column(sym, n, circulant_kind)
    S = apply_abs_inv_sqrt(c, yt, zero_tol, side="left")
    S = apply_abs_inv_sqrt(c, S, zero_tol, side="right")
    return symmetrize(S), yt, c


def preconditioned_spectrum(sym, n: int, circulant_kind: str = "strang",
                            zero_tol=DEFAULT_PINV_TOL) -> np.ndarray:
    """Eigenvalues of ``|C|^{-1} Y T`` via its symmetric similarity form, ascending."""
    S, _, _ = symmetric_preconditioned(sym, n, circulant_kind, zero_tol)
    return sym_eigs(S)


def pinv_times_toeplitz_svs(sym, n: int, circulant_kind: str = "strang",
                            zero_tol=DEFAULT_PINV_TOL) -> np.ndarray:
    """Ascending singular values of ``C^+ T_n[f]``."""
    T = build_toeplitz(sym, n)
    c = circulant_column(sym, n, circulant_kind)
    return singular_values(apply_circulant_pinv(c, T, zero_tol))


@dataclass
class ClusterReport:
    n: int
    eps: float
    count_near_plus1: int
    count_near_minus1: int
    outlier_count: int
    outliers: list
    kind: str = "cluster"

    @property
    def outlier_fraction(self) -> float:
        return self.outlier_count / self.n if self.n else 0.0

    def to_dict(self) -> dict:
        d = asdict(self)
        d["outlier_fraction"] = self.outlier_fraction
        return d


def cluster_report(eigs, eps: float) -> ClusterReport:
    """Count eigenvalues in ``(1-eps, 1+eps)``, ``(-1-eps, -1+eps)``, and the rest."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    lam = np.sort(np.asarray(eigs, dtype=np.float64))
    plus = np.abs(lam - 1.0) < eps
    minus = np.abs(lam + 1.0) < eps
    rest = ~(plus | minus)
    return ClusterReport(n=int(lam.size), eps=float(eps),
                         count_near_plus1=int(plus.sum()), count_near_minus1=int(minus.sum()),
                         outlier_count=int(rest.sum()), outliers=[float(x) for x in lam[rest]])
