"""Hot kernels with a compiled (Cython) implementation and a numpy fallback.

The compiled module is used when it was built and importable; setting the
environment variable ``SYMTOEP_PURE_PYTHON=1`` forces the fallback.
``BACKEND`` names the implementation that was selected at import time.
"""
import os

from . import _fallback

_force_pure = os.environ.get("SYMTOEP_PURE_PYTHON", "").strip() not in ("", "0")

if _force_pure:
    _impl = _fallback
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _fallback
        BACKEND = "python"

dft_rows = _impl.dft_rows
toeplitz_fill = _impl.toeplitz_fill

__all__ = ["BACKEND", "dft_rows", "toeplitz_fill"]
