"""Generating functions (symbols), their Fourier coefficients and samplings.

A symbol ``f`` on ``[-pi, pi]`` is extended periodically and expanded as
``f(t) ~ sum_k a_k exp(i k t)`` with ``a_k = (1/2pi) int f(t) exp(-i k t) dt``.
Three scalar families are supported, each with exact coefficients:

* :class:`TrigPolynomial`  -- finite coefficient table,
* :class:`ClosedFormSeries` -- coefficient rule plus pointwise evaluator
  (:func:`theta_squared` is the stock instance),
* :class:`PiecewiseConstant` -- exact per-interval integration.

:class:`MatrixSymbol` holds an ``s x s`` grid of scalar symbols.
"""
from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

import numpy as np

TWO_PI = 2.0 * math.pi


def reduce_angle(theta):
    """Map angles into ``[-pi, pi)`` by 2pi-periodicity.

    Returns the reduced angles and a boolean mask marking the seam
    ``-pi``, where symbols use their left value ``f(pi)``.
    """
    theta = np.asarray(theta, dtype=np.float64)
    r = theta - TWO_PI * np.round(theta / TWO_PI)
    r = np.where(r >= math.pi, r - TWO_PI, r)
    seam = r <= -math.pi
    return np.where(seam, -math.pi, r), seam


class ScalarSymbol:
    """Base class; subclasses provide ``coefficients`` and ``_values``."""

    def fourier_coefficient(self, k: int) -> float:
        return float(self.coefficients(np.array([k]))[0])

    def coefficients(self, ks) -> np.ndarray:
        raise NotImplementedError

    def _values(self, r, seam) -> np.ndarray:
        raise NotImplementedError

    def evaluate(self, theta):
        """Pointwise value(s) at ``theta`` (any real), after periodic reduction."""
        r, seam = reduce_angle(theta)
        out = np.asarray(self._values(r, seam), dtype=np.complex128)
        return complex(out) if out.ndim == 0 else out

    def __call__(self, theta):
        return self.evaluate(theta)

    def __neg__(self) -> "ScalarSymbol":
        return ScaledSymbol(self, -1.0)


@dataclass(frozen=True, eq=False)
class TrigPolynomial(ScalarSymbol):
    """``f(t) = sum_k a_k exp(i k t)`` over a finite window of integers ``k``."""

    coeffs: Mapping[int, float]

    def __post_init__(self):
        table = {}
        for k, a in dict(self.coeffs).items():
            a = float(a)
            if not math.isfinite(a):
                raise ValueError(f"non-finite coefficient a_{k}")
            if a != 0.0:
                table[int(k)] = a
        object.__setattr__(self, "coeffs", table)

    @property
    def degree(self) -> int:
        return max((abs(k) for k in self.coeffs), default=0)

    def coefficients(self, ks):
        ks = np.asarray(ks)
        return np.array([self.coeffs.get(int(k), 0.0) for k in ks.ravel()]).reshape(ks.shape)

    def _values(self, r, seam):
        # The seam needs no special case: the series is continuous there.
        out = np.zeros(np.shape(r), dtype=np.complex128)
        for k, a in self.coeffs.items():
            out = out + a * np.exp(1j * k * np.asarray(r))
        return out


@dataclass(frozen=True, eq=False)
class ClosedFormSeries(ScalarSymbol):
    """A symbol known through an exact coefficient rule and an evaluator on ``[-pi, pi]``."""

    rule: Callable[[np.ndarray], np.ndarray]
    evaluator: Callable[[np.ndarray], np.ndarray]
    name: str = "series"

    def coefficients(self, ks):
        return np.asarray(self.rule(np.asarray(ks, dtype=np.int64)), dtype=np.float64)

    def _values(self, r, seam):
        return self.evaluator(np.where(seam, math.pi, r))


def _theta2_rule(ks):
    ks = np.asarray(ks, dtype=np.int64)
    safe = np.where(ks == 0, 1, ks).astype(np.float64)
    sign = np.where(ks % 2 == 0, 1.0, -1.0)
    return np.where(ks == 0, math.pi ** 2 / 3.0, sign * 2.0 / safe ** 2)


def theta_squared() -> ClosedFormSeries:
    """``f(t) = t^2`` on ``[-pi, pi]``: ``a_0 = pi^2/3``, ``a_k = (-1)^k 2/k^2``."""
    return ClosedFormSeries(_theta2_rule, lambda t: np.asarray(t) ** 2, name="theta2")


@dataclass(frozen=True, eq=False)
class PiecewiseConstant(ScalarSymbol):
    """Value ``values[i]`` on ``[breaks[i], breaks[i+1])``; ``breaks`` spans ``[-pi, pi]``.

    The last interval is closed on the right, so ``f(pi)`` is the last value.
    """

    breaks: Sequence[float]
    values: Sequence[float]

    def __post_init__(self):
        b = np.asarray(self.breaks, dtype=np.float64)
        v = np.asarray(self.values, dtype=np.float64)
        if b.ndim != 1 or v.ndim != 1 or b.size != v.size + 1 or v.size == 0:
            raise ValueError("need m+1 breakpoints for m values")
        if not (np.all(np.isfinite(b)) and np.all(np.isfinite(v))):
            raise ValueError("non-finite breakpoint or value")
        if np.any(np.diff(b) <= 0):
            raise ValueError("breakpoints must be strictly increasing")
        if abs(b[0] + math.pi) > 1e-12 or abs(b[-1] - math.pi) > 1e-12:
            raise ValueError("breakpoints must start at -pi and end at pi")
        b[0], b[-1] = -math.pi, math.pi
        object.__setattr__(self, "breaks", b)
        object.__setattr__(self, "values", v)

    def coefficients(self, ks):
        ks = np.asarray(ks, dtype=np.int64)
        b, v = self.breaks, self.values
        flat = ks.ravel()
        out = np.empty(flat.shape, dtype=np.float64)
        zero = flat == 0
        out[zero] = np.dot(v, np.diff(b)) / TWO_PI
        k = flat[~zero].astype(np.float64)[:, None]
        if k.size:
            lo, hi = b[:-1][None, :], b[1:][None, :]
            terms = v * (np.exp(-1j * k * lo) - np.exp(-1j * k * hi)) / (1j * k)
            a = terms.sum(axis=1) / TWO_PI
            if np.max(np.abs(a.imag)) > 1e-12:
                raise ValueError("piecewise symbol has complex Fourier coefficients")
            out[~zero] = a.real
        return out.reshape(ks.shape)

    def _values(self, r, seam):
        idx = np.searchsorted(self.breaks, np.asarray(r), side="right") - 1
        idx = np.clip(idx, 0, self.values.size - 1)
        return np.where(seam, self.values[-1], self.values[idx])


@dataclass(frozen=True, eq=False)
class ScaledSymbol(ScalarSymbol):
    """``scale * base``; used for negation."""

    base: ScalarSymbol
    scale: float

    def coefficients(self, ks):
        return self.scale * self.base.coefficients(ks)

    def _values(self, r, seam):
        return self.scale * np.asarray(self.base._values(r, seam))


@dataclass(frozen=True, eq=False)
class MatrixSymbol:
    """``s x s`` matrix-valued symbol with one scalar symbol per entry."""

    entries: Sequence[Sequence[ScalarSymbol]]
    s: int = field(init=False)

    def __post_init__(self):
        rows = [tuple(r) for r in self.entries]
        s = len(rows)
        if s < 1 or any(len(r) != s for r in rows):
            raise ValueError("entries must form a non-empty square grid")
        object.__setattr__(self, "entries", tuple(rows))
        object.__setattr__(self, "s", s)

    def coefficient_block(self, k: int) -> np.ndarray:
        """``A_k`` with ``A_k[j, l] = a_k(f_{jl})``."""
        return np.array([[e.fourier_coefficient(k) for e in row] for row in self.entries])

    def coefficient_blocks(self, ks) -> np.ndarray:
        """Stack of ``A_k`` for all ``k`` in ``ks`` (shape ``(len(ks), s, s)``)."""
        ks = np.asarray(ks, dtype=np.int64)
        out = np.empty((ks.size, self.s, self.s))
        for j, row in enumerate(self.entries):
            for l, e in enumerate(row):
                out[:, j, l] = e.coefficients(ks)
        return out

    def check_hermitian_coefficients(self, kmax: int, tol: float = 1e-12) -> None:
        blocks = self.coefficient_blocks(np.arange(-kmax, kmax + 1))
        gap = np.abs(blocks - np.swapaxes(blocks, 1, 2)).max(initial=0.0)
        if gap > tol * max(1.0, np.abs(blocks).max(initial=0.0)):
            raise ValueError(f"coefficient blocks are not Hermitian (gap {gap:.3e})")

    def evaluate(self, theta) -> np.ndarray:
        return np.array([[e.evaluate(theta) for e in row] for row in self.entries],
                        dtype=np.complex128)


# --------------------------------------------------------------------------
# grid samplings


def grid_numerators(n: int) -> np.ndarray:
    """Integers ``q_j = 2j - n`` so that node ``theta_j = 2 pi q_j / n``, ``j = 1..n``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return 2 * np.arange(1, n + 1) - n


def _angle(q, n):
    # 2 pi q / n with q reduced mod n into [-n/2, n/2) first; exact at 0, +-pi.
    q = np.mod(q, n)
    q = np.where(2 * q >= n, q - n, q)
    return TWO_PI * (q / n)


def symbol_grid(n: int) -> np.ndarray:
    """Nodes ``theta_j = -2pi + 4 pi j / n`` for ``j = 1..n`` (last node exactly ``2pi``)."""
    return TWO_PI * (grid_numerators(n) / n)


def _abs_at(sym, q, n):
    return np.abs(np.atleast_1d(sym.evaluate(_angle(q, n))))


def psi_samples(sym: ScalarSymbol, n: int) -> np.ndarray:
    """Samples of the odd extension built by translation of ``|f|``.

    Nodes in ``(0, 2pi]`` give ``|f(theta)|``; nodes in ``[-2pi, 0]`` give
    ``-|f(theta + 2pi)|``. Node 0 sits on the negative branch, so exactly
    ``floor(n/2)`` samples are non-positive.
    """
    q = grid_numerators(n)
    neg = q <= 0
    return np.where(neg, -_abs_at(sym, q + n, n), _abs_at(sym, q, n))


def phi_samples(sym: ScalarSymbol, n: int) -> np.ndarray:
    """Like :func:`psi_samples` but the negative branch reflects: ``-|f(-theta)|``."""
    q = grid_numerators(n)
    neg = q <= 0
    return np.where(neg, -_abs_at(sym, -q, n), _abs_at(sym, q, n))


def matrix_abs_eigs(msym: MatrixSymbol, theta: float) -> np.ndarray:
    """Eigenvalues of ``(f f*)^(1/2)`` at ``theta``, i.e. singular values of ``f(theta)``, ascending."""
    value = msym.evaluate(theta)
    if not np.all(np.isfinite(value)):
        raise FloatingPointError(f"symbol value not finite at theta={theta}")
    return np.sort(np.linalg.svd(value, compute_uv=False))


def psi_samples_block(msym: MatrixSymbol, n: int) -> np.ndarray:
    """Concatenated per-node samples (length ``s*n``) for a matrix-valued symbol."""
    q = grid_numerators(n)
    out = []
    for qj in q:
        if qj <= 0:
            out.append(-matrix_abs_eigs(msym, _angle(qj + n, n)))
        else:
            out.append(matrix_abs_eigs(msym, _angle(qj, n)))
    return np.concatenate(out)


def max_abs_on_grid(sym, n: int) -> float:
    """``max_j |f(theta_j)|`` over the sampling grid."""
    if isinstance(sym, MatrixSymbol):
        return float(np.max(np.abs(psi_samples_block(sym, n))))
    return float(np.max(np.abs(psi_samples(sym, n))))


# --------------------------------------------------------------------------
# symbol definition files

_PI_EXPR = re.compile(r"^\s*([+-])?\s*(\d+(?:\.\d*)?)?\s*\*?\s*pi\s*(?:/\s*(\d+(?:\.\d*)?))?\s*$")


def _parse_angle(x) -> float:
    if isinstance(x, (int, float)):
        return float(x)
    m = _PI_EXPR.match(str(x))
    if not m:
        try:
            return float(x)
        except ValueError:
            raise ValueError(f"cannot parse breakpoint {x!r}") from None
    sign = -1.0 if m.group(1) == "-" else 1.0
    num = float(m.group(2)) if m.group(2) else 1.0
    den = float(m.group(3)) if m.group(3) else 1.0
    return sign * num * math.pi / den


def symbol_from_dict(spec: Mapping):
    """Build a symbol from its JSON description (see README for the format)."""
    kind = spec.get("kind")
    if kind == "trigpoly":
        return TrigPolynomial({int(k): float(v) for k, v in spec["coeffs"].items()})
    if kind == "theta2":
        return theta_squared()
    if kind == "piecewise":
        breaks = [_parse_angle(b) for b in spec["breaks"]]
        return PiecewiseConstant(breaks, [float(v) for v in spec["values"]])
    if kind == "matrix":
        entries = [[symbol_from_dict(e) for e in row] for row in spec["entries"]]
        msym = MatrixSymbol(entries)
        if "s" in spec and int(spec["s"]) != msym.s:
            raise ValueError(f"declared s={spec['s']} but entries are {msym.s}x{msym.s}")
        return msym
    raise ValueError(f"unknown symbol kind {kind!r}")


def load_symbol(path):
    with open(path, encoding="utf-8") as fh:
        return symbol_from_dict(json.load(fh))
