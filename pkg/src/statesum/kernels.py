"""Kernel selection: the compiled extension when built, else the Python twin.

Set ``STATESUM_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

__all__ = ["enumerate_histogram", "BACKEND", "python_kernel", "compiled_kernel"]

python_kernel = _kernels_py.enumerate_histogram
compiled_kernel = None

try:
    from . import _kernels as _compiled  # type: ignore[attr-defined]

    compiled_kernel = _compiled.enumerate_histogram
except ImportError:
    _compiled = None

if compiled_kernel is not None and os.environ.get("STATESUM_PURE_PYTHON", "") not in ("1", "true", "yes"):
    enumerate_histogram = compiled_kernel
    BACKEND = "cython"
else:
    enumerate_histogram = python_kernel
    BACKEND = "python"
