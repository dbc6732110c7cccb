"""Kernel selection: compiled Cython core when available, numpy fallback otherwise.

Set SPFILTER_PURE_PYTHON=1 to force the fallback (used by the kernel
benchmark and the cross-implementation tests).
"""

import os

from spfilter import _kernels_py

SEGMENT = _kernels_py.SEGMENT
QUAD = _kernels_py.QUAD
TRI = _kernels_py.TRI
HEX = _kernels_py.HEX
TET = _kernels_py.TET

space_dim = _kernels_py.space_dim
mode_count = _kernels_py.mode_count

if os.environ.get("SPFILTER_PURE_PYTHON", "").strip() not in ("", "0"):
    _impl = _kernels_py
    HAVE_COMPILED = False
else:
    try:
        from spfilter import _kernels as _impl
        HAVE_COMPILED = True
    except ImportError:
        _impl = _kernels_py
        HAVE_COMPILED = False

vandermonde = _impl.vandermonde
grad_vandermonde = _impl.grad_vandermonde
