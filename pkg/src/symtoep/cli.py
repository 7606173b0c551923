"""Command line front end: ``symtoep <mode> --symbol NAME|PATH --n 300[,600] ...``.

Each size ``n`` writes ``report.json``, ``data.csv`` and optionally
``plot.svg`` into ``<out>/n<n>/``. Exit codes: 0 success, 1 usage,
2 input, 3 numeric failure.
"""
from __future__ import annotations

import argparse
import logging
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import catalog, precond, spectral, structured, symbols
from .reportio import write_columns_csv, write_json
from .svgplot import scatter_svg

log = logging.getLogger("symtoep")

MODES = ("spectrum", "precond", "pinv-sv", "block", "inertia", "svprofile")
EXIT_USAGE, EXIT_INPUT, EXIT_NUMERIC = 1, 2, 3


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


@dataclass
class ExperimentConfig:
    mode: str
    symbol: str
    ns: list
    out: Path
    circulant: str = "strang"
    delta: float | None = None
    eps: float = 0.05
    pinv_tol: float = precond.DEFAULT_PINV_TOL
    zero_tol: float = 1e-8
    sampling: str = "psi"
    m_values: list = field(default_factory=lambda: [10.0, 100.0, 1000.0])
    plot: bool = False

    def validate(self):
        if self.mode not in MODES:
            raise UsageError(f"unknown mode {self.mode!r}")
        if not self.ns or any(n < 2 for n in self.ns):
            raise UsageError("every n must be >= 2")
        if self.circulant not in structured.CIRCULANTS:
            raise UsageError(f"unknown circulant {self.circulant!r}")
        if self.eps <= 0 or (self.delta is not None and self.delta < 0):
            raise UsageError("eps must be positive and delta non-negative")
        if self.sampling not in ("psi", "phi"):
            raise UsageError("sampling must be psi or phi")


def resolve_symbol(source: str):
    if source in catalog.BUILTINS:
        return catalog.builtin(source)
    path = Path(source)
    if source.startswith("ex") and not path.exists():
        raise InputError(f"unknown built-in symbol {source!r}")
    try:
        return symbols.load_symbol(path)
    except OSError as exc:
        raise InputError(f"cannot read symbol file {source!r}: {exc}") from exc
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"invalid symbol file {source!r}: {exc}") from exc


def _symbol_degree(sym):
    return sym.degree if isinstance(sym, symbols.TrigPolynomial) else None


def _run_one(cfg: ExperimentConfig, sym, n: int) -> Path:
    outdir = cfg.out / f"n{n}"
    outdir.mkdir(parents=True, exist_ok=True)
    doc = {"mode": cfg.mode, "symbol": cfg.symbol, "n": n, "circulant": None, "checks": {}}
    checks = doc["checks"]
    drop_top = False
    sampler = symbols.phi_samples if cfg.sampling == "phi" else symbols.psi_samples

    if cfg.mode in ("spectrum", "inertia"):
        yt = structured.flip_left(structured.build_toeplitz(sym, n))
        lam = spectral.sym_eigs(yt)
        samples = sampler(sym, n)
        delta = cfg.delta if cfg.delta is not None else 0.05 * symbols.max_abs_on_grid(sym, n)
        rep = spectral.distribution_report(lam, samples, delta,
                                           zero_tol=cfg.zero_tol * float(np.linalg.norm(yt)))
        n_plus, n_minus, n_zero = rep.inertia
        checks.update(n_plus=n_plus, n_minus=n_minus, n_zero=n_zero,
                      imbalance=abs(n_plus - n_minus))
        deg = _symbol_degree(sym)
        if deg is not None:
            checks["imbalance_bound"] = 2 * deg
            checks["imbalance_within_bound"] = abs(n_plus - n_minus) <= 2 * deg
        doc["report"] = rep.to_dict()
        header, cols = ("eigenvalue", "sample"), (rep.eigenvalues, rep.samples)

    elif cfg.mode == "block":
        M = structured.flip_kron_left(structured.build_block_toeplitz(sym, n), sym.s)
        lam = spectral.sym_eigs(M)
        samples = symbols.psi_samples_block(sym, n)
        delta = cfg.delta if cfg.delta is not None else 0.05 * float(np.abs(samples).max())
        rep = spectral.distribution_report(lam, samples, delta,
                                           zero_tol=cfg.zero_tol * float(np.linalg.norm(M)))
        doc["report"] = rep.to_dict()
        header, cols = ("eigenvalue", "sample"), (rep.eigenvalues, rep.samples)

    elif cfg.mode == "precond":
        doc["circulant"] = cfg.circulant
        S, yt, _ = precond.symmetric_preconditioned(sym, n, cfg.circulant, cfg.pinv_tol)
        lam = spectral.sym_eigs(S)
        rep = precond.cluster_report(lam, cfg.eps)
        tol_s = cfg.zero_tol * float(np.linalg.norm(S))
        tol_y = cfg.zero_tol * float(np.linalg.norm(yt))
        inert_s = spectral.inertia(lam, tol_s)
        inert_y = spectral.inertia(spectral.sym_eigs(yt), tol_y)
        checks.update(n_plus=inert_s[0], n_minus=inert_s[1], n_zero=inert_s[2],
                      sylvester_inertia_equal=inert_s == inert_y,
                      outlier_fraction=rep.outlier_fraction)
        doc["report"] = rep.to_dict()
        ones = np.sort(np.sign(symbols.grid_numerators(n) - 0.5))
        header, cols = ("eigenvalue", "sample"), (lam, ones)
        drop_top = True

    elif cfg.mode == "pinv-sv":
        doc["circulant"] = cfg.circulant
        svs = precond.pinv_times_toeplitz_svs(sym, n, cfg.circulant, cfg.pinv_tol)
        delta = cfg.delta if cfg.delta is not None else cfg.eps
        rep = spectral.distribution_report(svs, np.ones(n), delta)
        checks["fraction_near_one"] = 1.0 - rep.outlier_count / n
        doc["report"] = rep.to_dict()
        header, cols = ("singular_value", "sample"), (rep.eigenvalues, rep.samples)

    elif cfg.mode == "svprofile":
        svs = spectral.singular_values(structured.build_toeplitz(sym, n))
        prof = spectral.sv_profile(svs, cfg.m_values)
        doc["report"] = prof.to_dict()
        samples = np.sort(np.abs(symbols.psi_samples(sym, n)))
        header, cols = ("singular_value", "sample"), (svs, samples)

    write_json(doc, outdir / "report.json")
    write_columns_csv(outdir / "data.csv", header, *cols)
    if cfg.plot:
        _plot(cfg, n, outdir, cols, header, drop_top)
    log.info("wrote %s", outdir)
    return outdir


def _plot(cfg, n, outdir, cols, header, drop_top):
    values, samples = np.asarray(cols[0], float), np.asarray(cols[1], float)
    j = np.arange(1, values.size + 1)
    keep = np.ones(values.size, bool)
    if drop_top and values.size > 1:
        keep[int(np.argmax(np.abs(values)))] = False
    scatter_svg(outdir / "plot.svg",
                [(header[0], j[keep], values[keep], "circle"),
                 (header[1], j, samples, "cross")],
                title=f"{cfg.symbol}: {cfg.mode}, n = {n}", xlabel="j", ylabel="value")


def run(cfg: ExperimentConfig) -> int:
    """Execute an experiment; returns the process exit code."""
    try:
        cfg.validate()
        sym = resolve_symbol(cfg.symbol)
        is_block = isinstance(sym, symbols.MatrixSymbol)
        if (cfg.mode == "block") != is_block:
            raise InputError(f"mode {cfg.mode!r} is incompatible with symbol {cfg.symbol!r}")
        if is_block:
            sym.check_hermitian_coefficients(max(cfg.ns))
        cfg.out.mkdir(parents=True, exist_ok=True)
        threads = int(os.environ.get("SYMTOEP_THREADS", "0") or 0) or (os.cpu_count() or 1)
        workers = max(1, min(threads, len(cfg.ns)))
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(lambda n: _run_one(cfg, sym, n), cfg.ns))
    except UsageError as exc:
        log.error("%s", exc)
        return EXIT_USAGE
    except InputError as exc:
        log.error("%s", exc)
        return EXIT_INPUT
    except (ArithmeticError, np.linalg.LinAlgError, spectral.SymmetryError) as exc:
        log.error("numeric failure: %s", exc)
        return EXIT_NUMERIC
    except ValueError as exc:
        log.error("invalid input: %s", exc)
        return EXIT_INPUT
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _float_list(text):
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def build_parser():
    p = _Parser(prog="symtoep", description=__doc__.splitlines()[0])
    p.add_argument("mode", choices=MODES)
    p.add_argument("--symbol", required=True, help="built-in name (ex4.1..ex4.8) or JSON symbol file")
    p.add_argument("--n", dest="ns", type=_int_list, required=True, help="size(s), e.g. 300,600")
    p.add_argument("--circulant", choices=sorted(structured.CIRCULANTS), default="strang")
    p.add_argument("--delta", type=float, default=None,
                   help="outlier threshold (default 0.05 * max |f| on the grid)")
    p.add_argument("--eps", "--cluster-eps", dest="eps", type=float, default=0.05,
                   help="cluster radius around +-1 (default 0.05)")
    p.add_argument("--pinv-tol", type=float, default=precond.DEFAULT_PINV_TOL,
                   help="relative threshold below which circulant eigenvalues count as zero")
    p.add_argument("--zero-tol", type=float, default=1e-8,
                   help="inertia zero threshold relative to ||M||_F")
    p.add_argument("--sampling", choices=("psi", "phi"), default="psi")
    p.add_argument("--M", dest="m_values", type=_float_list, default=[10.0, 100.0, 1000.0],
                   help="svprofile thresholds 1/M")
    p.add_argument("--out", type=Path, required=True)
    p.add_argument("--plot", action="store_true", help="also write plot.svg")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    cfg = ExperimentConfig(mode=args.mode, symbol=args.symbol, ns=args.ns, out=args.out,
                           circulant=args.circulant, delta=args.delta, eps=args.eps,
                           pinv_tol=args.pinv_tol, zero_tol=args.zero_tol,
                           sampling=args.sampling, m_values=args.m_values, plot=args.plot)
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
