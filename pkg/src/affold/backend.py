"""Kernel backend selection.

The compiled extension is preferred when it imports cleanly; setting
``AFFOLD_PURE_PYTHON=1`` forces the pure-Python kernels.  Matrices whose
entries do not fit the compiled fixed-width path transparently fall back to
the pure implementation per call.
"""

from __future__ import annotations

import os

from . import _pycore

_INT_LIMIT = 2**31  # entry bound for the int64 compiled path
_MAX_N = 16  # compiled kernels use fixed-size buffers

if os.environ.get("AFFOLD_PURE_PYTHON") == "1":
    _impl = _pycore
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pycore

BACKEND_NAME = _impl.BACKEND_NAME


def _fits_fixed_width(b: tuple, n: int) -> bool:
    return n <= _MAX_N and all(-_INT_LIMIT < x < _INT_LIMIT for x in b)


def mutate_flat(b: tuple, n: int, k: int) -> tuple:
    if _impl is not _pycore and not _fits_fixed_width(b, n):
        return _pycore.mutate_flat(b, n, k)
    return _impl.mutate_flat(b, n, k)


def canonical_flat(b: tuple, colors: tuple, n: int, want_aut: bool = False):
    if _impl is not _pycore and not _fits_fixed_width(b, n):
        return _pycore.canonical_flat(b, colors, n, want_aut)
    return _impl.canonical_flat(b, colors, n, want_aut)
