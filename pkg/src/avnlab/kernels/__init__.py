"""Exhaustive-enumeration kernels with backend selection at import.

The compiled Cython extension `_core` is preferred; the pure-Python
`_pure` module is a drop-in fallback used when the extension is missing
or when the AVNLAB_PURE_PYTHON environment variable is set.  Both expose
the same two functions; `benchmarks/bench_kernels.py` compares them.
"""

import os

if os.environ.get("AVNLAB_PURE_PYTHON"):
    from . import _pure as _impl
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pure as _impl

BACKEND = _impl.BACKEND
satisfaction_histogram = _impl.satisfaction_histogram
max_weighted_parity = _impl.max_weighted_parity

__all__ = ["BACKEND", "satisfaction_histogram", "max_weighted_parity"]
