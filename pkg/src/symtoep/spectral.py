"""Eigenvalues, inertia and finite-n distribution diagnostics."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field

import numpy as np

SYMMETRY_BAND = 1e-10


class SymmetryError(ValueError):
    """Matrix handed to the symmetric eigensolver is not symmetric."""


def symmetrize(M, band=SYMMETRY_BAND) -> np.ndarray:
    """Return ``(M + M^T)/2`` after checking ``M`` is symmetric within ``band`` (relative)."""
    M = np.asarray(M, dtype=np.float64)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise FloatingPointError("matrix has non-finite entries")
    scale = np.abs(M).max(initial=0.0)
    gap = np.abs(M - M.T).max(initial=0.0)
    if gap > band * scale:
        raise SymmetryError(f"asymmetry {gap:.3e} exceeds {band:g} * {scale:.3e}")
    return 0.5 * (M + M.T)


def sym_eigs(M) -> np.ndarray:
    """All eigenvalues of a real symmetric matrix, ascending (LAPACK ``syevd``)."""
    S = symmetrize(M)
    if S.size == 0:
        return np.zeros(0)
    try:
        return np.linalg.eigvalsh(S)
    except np.linalg.LinAlgError as exc:
        raise FloatingPointError(f"eigensolver did not converge: {exc}") from exc


def singular_values(M) -> np.ndarray:
    """Ascending singular values as ``sqrt(eig(M^T M))``, round-off clamped at zero."""
    M = np.asarray(M, dtype=np.float64)
    lam = sym_eigs(M.T @ M)
    return np.sqrt(np.clip(lam, 0.0, None))


def antidiag_block_eigs(A) -> np.ndarray:
    """Eigenvalues of ``[[0, A], [A^T, 0]]`` without forming it.

    With ``A`` of shape ``M x m`` and ``k = |M - m|`` the spectrum is
    ``{+sigma_j(A)} u {-sigma_j(A)} u {0}*k``; returned ascending.
    """
    A = np.asarray(A, dtype=np.float64)
    if A.ndim != 2:
        raise ValueError("A must be 2-D")
    M, m = A.shape
    if min(M, m) == 0:
        return np.zeros(M + m)
    sig = np.linalg.svd(A, compute_uv=False)
    out = np.concatenate((sig, -sig, np.zeros(abs(M - m))))
    return np.sort(out)


def default_zero_tol(M) -> float:
    return 1e-8 * float(np.linalg.norm(M))


def inertia(eigs, zero_tol: float) -> tuple[int, int, int]:
    """``(n_plus, n_minus, n_zero)`` with ``|lambda| <= zero_tol`` counted as zero."""
    eigs = np.asarray(eigs, dtype=np.float64)
    zero = np.abs(eigs) <= zero_tol
    return (int(np.sum((eigs > 0) & ~zero)), int(np.sum((eigs < 0) & ~zero)),
            int(np.sum(zero)))


@dataclass
class SpectrumReport:
    n: int
    eigenvalues: np.ndarray
    samples: np.ndarray
    deviations: np.ndarray
    outlier_delta: float
    outlier_count: int
    quantiles: dict
    inertia: tuple
    zero_tol: float = 0.0
    kind: str = field(default="spectrum")

    def to_dict(self) -> dict:
        d = asdict(self)
        for key in ("eigenvalues", "samples", "deviations"):
            d[key] = [float(x) for x in d[key]]
        d["inertia"] = list(self.inertia)
        return d

    def outliers(self) -> np.ndarray:
        return self.eigenvalues[self.deviations > self.outlier_delta]


def distribution_report(eigs, samples, outlier_delta: float,
                        zero_tol: float | None = None) -> SpectrumReport:
    """Pair ascending eigenvalues with ascending samples and summarize the gaps.

    ``zero_tol`` only affects the inertia triple; it defaults to
    ``1e-8 * ||eigs||_2`` (which equals ``1e-8 ||M||_F`` for symmetric ``M``).
    """
    lam = np.sort(np.asarray(eigs, dtype=np.float64))
    smp = np.sort(np.asarray(samples, dtype=np.float64))
    if lam.shape != smp.shape or lam.ndim != 1:
        raise ValueError(f"length mismatch: {lam.shape} eigenvalues vs {smp.shape} samples")
    dev = np.abs(lam - smp)
    if zero_tol is None:
        zero_tol = 1e-8 * float(np.linalg.norm(lam))
    q = {"50": 0.0, "90": 0.0, "99": 0.0, "max": 0.0}
    if dev.size:
        p50, p90, p99 = np.quantile(dev, [0.5, 0.9, 0.99])
        q = {"50": float(p50), "90": float(p90), "99": float(p99), "max": float(dev.max())}
    return SpectrumReport(
        n=int(lam.size), eigenvalues=lam, samples=smp, deviations=dev,
        outlier_delta=float(outlier_delta),
        outlier_count=int(np.sum(dev > outlier_delta)),
        quantiles=q, inertia=inertia(lam, zero_tol), zero_tol=float(zero_tol))


def hat_family(lo: float, hi: float, count: int = 21):
    """Centers and common width for the default hat-function test family."""
    if hi <= lo:
        hi = lo + 1.0
    centers = np.linspace(lo, hi, count)
    return centers, (hi - lo) / (count - 1)


def weyl_test(eigs, samples, centers=None, width=None) -> np.ndarray:
    """Differences of empirical test-function averages over eigenvalues vs samples.

    Test functions: hats ``max(0, 1 - |x - c|/w)`` for every center, then
    ``x`` and ``x^2`` clipped to the joint range of both inputs.
    """
    lam = np.asarray(eigs, dtype=np.float64)
    smp = np.asarray(samples, dtype=np.float64)
    lo = float(min(lam.min(), smp.min()))
    hi = float(max(lam.max(), smp.max()))
    if centers is None or width is None:
        c0, w0 = hat_family(lo, hi)
        centers = c0 if centers is None else centers
        width = w0 if width is None else width
    centers = np.asarray(centers, dtype=np.float64)

    def averages(x):
        hats = np.clip(1.0 - np.abs(x[None, :] - centers[:, None]) / width, 0.0, None)
        xc = np.clip(x, lo, hi)
        return np.concatenate((hats.mean(axis=1), [xc.mean(), (xc ** 2).mean()]))

    return np.abs(averages(lam) - averages(smp))


@dataclass
class SparselyVanishingProfile:
    M_values: list
    fractions: list
    n: int
    kind: str = field(default="svprofile")

    def to_dict(self) -> dict:
        return asdict(self)


def sv_profile(svs, M_list) -> SparselyVanishingProfile:
    """Fraction of singular values below ``1/M`` for each ``M``."""
    svs = np.asarray(svs, dtype=np.float64)
    Ms = sorted(float(M) for M in M_list)
    if any(M <= 0 for M in Ms):
        raise ValueError("M values must be positive")
    n = svs.size
    fr = [float(np.sum(svs < 1.0 / M) / n) if n else 0.0 for M in Ms]
    return SparselyVanishingProfile(M_values=Ms, fractions=fr, n=n)
