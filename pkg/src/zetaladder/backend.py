"""Kernel backend selection.

Prefers the compiled extension; falls back to the numpy implementation when
the extension is missing or when ZL_PURE_PYTHON is set (non-empty) in the
environment.  The chosen backend is identified by `TAG`, which participates
in the integral-cache fingerprint: caches built by different backends differ
in the last bits and must not be mixed silently.
"""
import os

from . import _zkernel_py

_impl = _zkernel_py
TAG = "py"

if not os.environ.get("ZL_PURE_PYTHON"):
    try:
        from . import _zkernel as _impl_c

        _impl = _impl_c
        TAG = "c"
    except ImportError:
        pass

rs_z_block = _impl.rs_z_block
