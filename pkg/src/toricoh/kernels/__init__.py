"""Batch kernels used by the exhaustive checks.

Each kernel exists twice: an ``@njit`` loop version and a vectorized numpy
version. The public name is bound to the numba version unless numba is
missing or the environment variable ``TORICOH_DISABLE_NUMBA`` is set to a
non-empty value other than ``0``. Both versions return identical results;
only the speed differs.
"""

import os

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

NUMBA_AVAILABLE = numba is not None
NUMBA_DISABLED = os.environ.get("TORICOH_DISABLE_NUMBA", "") not in ("", "0")
USE_NUMBA = NUMBA_AVAILABLE and not NUMBA_DISABLED
BACKEND = "numba" if USE_NUMBA else "numpy"


def njit(fn):
    if numba is None:  # pragma: no cover
        return fn
    return numba.njit(cache=True, nogil=True)(fn)


def select(numba_impl, numpy_impl):
    return numba_impl if USE_NUMBA else numpy_impl
