"""Summation-kernel backend selection.

The compiled extension (``altzeta._kernels``) and the pure-Python module
(``altzeta._kernels_py``) export the same surface; the compiled one is used
when present unless ALTZETA_PURE=1 forces the fallback.  ``BACKEND`` reports
which twin is live.
"""

from __future__ import annotations

import os

if os.environ.get("ALTZETA_PURE") == "1":
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND
CVZ_MAX_TERMS = _impl.CVZ_MAX_TERMS
cvz_sum_f64 = _impl.cvz_sum_f64
cvz_sum_c128 = _impl.cvz_sum_c128
dd_alt_sum = getattr(_impl, "dd_alt_sum", None)
dd_powlog_sum = _impl.dd_powlog_sum
dd_powlog_table = _impl.dd_powlog_table

if dd_alt_sum is None:
    from ._kernels_py import dd_alt_sum  # noqa: F401  (generic dd path stays in Python)
