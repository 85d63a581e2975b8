"""Kernel backend selection.

The compiled extension ``nodalis._ckernels`` is used when it imports;
otherwise the pure-Python twins in ``nodalis._pykernels``.  Setting
``NODALIS_PURE_PYTHON=1`` forces the fallback.  ``BACKEND`` names the active
choice.
"""
import os

from . import _pykernels

python_backend = _pykernels

if os.environ.get("NODALIS_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

compiled_backend = _impl if BACKEND == "cython" else None

conv_int = _impl.conv_int
conv_mod = _impl.conv_mod
inv_mod = _impl.inv_mod
inv_int = _impl.inv_int

__all__ = ["BACKEND", "conv_int", "conv_mod", "inv_mod", "inv_int",
           "python_backend", "compiled_backend"]
