"""Kernel selection.

Imports the compiled ``_kernels`` extension when it is available and falls
back to ``_fallback`` otherwise.  ``HADRING_PURE=1`` forces the fallback.
``BACKEND`` names the implementation in use.
"""
import os

from hadring import _fallback

if os.environ.get("HADRING_PURE"):
    _impl = _fallback
    BACKEND = "python"
else:
    try:
        from hadring import _kernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _fallback
        BACKEND = "python"

clmul = _impl.clmul
reduce = _impl.reduce
mulmod = _impl.mulmod
xor_convolve = _impl.xor_convolve
matmul = _impl.matmul
had_matmul = _impl.had_matmul

__all__ = ["BACKEND", "clmul", "reduce", "mulmod", "xor_convolve", "matmul", "had_matmul"]
