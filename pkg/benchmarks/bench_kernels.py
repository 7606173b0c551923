"""Compare the compiled and pure-Python kernels.

Usage: ``python3 benchmarks/bench_kernels.py [--repeat 5] [--batch 64]``
"""
import argparse
import timeit

import numpy as np

from symtoep._core import _fallback

try:
    from symtoep._core import _kernels
except ImportError:  # extension not built
    _kernels = None

SIZES = (157, 500, 589, 1000, 1024)


def best_of(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--batch", type=int, default=64)
    args = ap.parse_args(argv)
    backends = {"python": _fallback}
    if _kernels is not None:
        backends["cython"] = _kernels
    rng = np.random.default_rng(0)
    print(f"{'kernel':<14}{'n':>6}" + "".join(f"{b:>12}" for b in backends) + f"{'numpy.fft':>12}")
    for n in SIZES:
        X = rng.standard_normal((args.batch, n)) + 1j * rng.standard_normal((args.batch, n))
        times = [best_of(lambda m=m: m.dft_rows(X, False), args.repeat) for m in backends.values()]
        ref = best_of(lambda: np.fft.fft(X, axis=1), args.repeat)
        print(f"{'dft_rows':<14}{n:>6}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times) + f"{ref * 1e3:>10.2f}ms")
    for n in SIZES:
        coeffs = rng.standard_normal(2 * n - 1)
        times = [best_of(lambda m=m: m.toeplitz_fill(coeffs, n), args.repeat) for m in backends.values()]
        print(f"{'toeplitz_fill':<14}{n:>6}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times))


if __name__ == "__main__":
    main()
