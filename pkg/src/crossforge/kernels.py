"""Kernel backend selection.

Imports the compiled extension when available, otherwise the pure-Python
twin.  Set CROSSFORGE_PURE=1 to force the fallback (used by the benchmark
and the backend-equivalence tests).
"""
from __future__ import annotations

import os

from crossforge import _kernels_py

DegenerateSceneError = _kernels_py.DegenerateSceneError

if os.environ.get("CROSSFORGE_PURE"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from crossforge import _kernels as _impl  # type: ignore[no-redef]
        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

two_layer_crossings = _impl.two_layer_crossings
qubo_min = _impl.qubo_min


def segment_crossings(segments, period):
    try:
        return _impl.segment_crossings(segments, period)
    except _impl.DegenerateSceneError as exc:
        # normalize the exception class across backends
        raise DegenerateSceneError(str(exc)) from None
