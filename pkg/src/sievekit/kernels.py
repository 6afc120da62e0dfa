"""Kernel backend selection.

The compiled extension is used when it imports cleanly; setting
``SIEVEKIT_PURE_PYTHON=1`` forces the pure-Python fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if os.environ.get("SIEVEKIT_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py

poly_mul = _impl.poly_mul
poly_div_qint = _impl.poly_div_qint
poly_rem_monic = _impl.poly_rem_monic
continuant = _impl.continuant
count_matchings = _impl.count_matchings

__all__ = [
    "BACKEND",
    "poly_mul",
    "poly_div_qint",
    "poly_rem_monic",
    "continuant",
    "count_matchings",
]
