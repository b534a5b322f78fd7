"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it was built; otherwise the
pure-Python ``_pykernels`` module is used.  Setting ``HARDYSUMS_PURE_PYTHON=1``
forces the fallback (the test suite uses this to compare both).
"""

import os

from hardysums import _pykernels

if os.environ.get("HARDYSUMS_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from hardysums import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels

BACKEND = _impl.BACKEND

dedekind_scaled = _impl.dedekind_scaled
s4_sum = _impl.s4_sum
s_sum = _impl.s_sum
count_triangle = _impl.count_triangle
count_tetra = _impl.count_tetra
scan_crossings = _impl.scan_crossings


def available_backends():
    """Map of backend name to kernel module for every backend that imports."""
    out = {"python": _pykernels}
    try:
        from hardysums import _ckernels
    except ImportError:
        pass
    else:
        out["cython"] = _ckernels
    return out
