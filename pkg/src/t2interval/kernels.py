"""Batched numeric kernels with a compiled core and a numpy fallback.

The compiled extension ``t2interval._kernels`` is used when it imports;
otherwise, or when ``T2INTERVAL_PURE_PYTHON=1`` is set, the numpy versions in
``t2interval._kernels_py`` are used. ``BACKEND`` names the active one.
"""

import os

from . import _kernels_py

ADD, SUB, MUL, DIV = 0, 1, 2, 3

python_backend = _kernels_py

try:
    from . import _kernels as compiled_backend
except ImportError:
    compiled_backend = None

if compiled_backend is None or os.environ.get("T2INTERVAL_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    _impl = compiled_backend

BACKEND = "cython" if _impl is compiled_backend else "python"

type1_batch = _impl.type1_batch
formula_batch = _impl.formula_batch
corner_batch = _impl.corner_batch
membership_scan = _impl.membership_scan
distances_to = _impl.distances_to
pair_distances = _impl.pair_distances
cauchy_scan = _impl.cauchy_scan


def backends():
    """Available backends as a {name: module} mapping."""
    out = {"python": _kernels_py}
    if compiled_backend is not None:
        out["cython"] = compiled_backend
    return out
