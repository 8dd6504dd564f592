"""Kernel selection: compiled Racah core when available, else pure Python.

Set SPINNET_NO_EXT=1 to force the pure-Python kernel (used by the
benchmark to compare both implementations).
"""

import os

if os.environ.get("SPINNET_NO_EXT"):
    from . import _racah_py as _impl
else:
    try:
        from . import _racah_c as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _racah_py as _impl

sixj_raw = _impl.sixj_raw
BACKEND = _impl.BACKEND


def backend() -> str:
    """Name of the active kernel: 'c' or 'python'."""
    return BACKEND
