"""Kernel dispatch: compiled extension when importable, pure Python otherwise.

Set ``DIFFPOW_PURE_PYTHON=1`` to force the fallback (used by the benchmark
and by the kernel-agreement tests).
"""
import os

from . import _kernels_py

if os.environ.get("DIFFPOW_PURE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "python" if _impl is _kernels_py else "cython"

minimal_elements = _impl.minimal_elements
scan_box = _impl.scan_box
