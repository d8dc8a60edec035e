"""JIT selection for the hot kernels.

Kernels are written in the subset of Python that numba compiles. Setting
``MINIPAINT_JIT=0`` (or running without numba installed) executes the very same
functions as plain Python over numpy arrays, which is slow but handy for
debugging and for benchmarking the compiled path against the interpreted one.
"""
from __future__ import annotations

import os

_FLAG = os.environ.get("MINIPAINT_JIT", "1").strip().lower()
_WANT_JIT = _FLAG not in ("0", "false", "no", "off")

try:
    if not _WANT_JIT:
        raise ImportError
    import numba as _numba

    JIT_ENABLED = True
except ImportError:  # pragma: no cover - depends on environment
    _numba = None
    JIT_ENABLED = False


def kernel(fn):
    """Compile ``fn`` with ``numba.njit`` when enabled, otherwise return it as-is."""
    if JIT_ENABLED:
        return _numba.njit(cache=True, nogil=True)(fn)
    return fn


def default_threads() -> int:
    """Worker count for the solver pool, from ``MINIPAINT_THREADS`` (default 1)."""
    raw = os.environ.get("MINIPAINT_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1
