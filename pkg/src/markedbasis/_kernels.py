"""Dispatch between the compiled speedup kernels and the pure-Python ones.

Set MARKEDBASIS_PURE=1 to force the pure-Python implementations (used by
the benchmark and the kernel-equivalence tests).
"""

import os

from . import _kernels_py as _py

if os.environ.get("MARKEDBASIS_PURE"):
    _impl = _py
    COMPILED = False
else:
    try:
        from . import _speedups as _impl  # type: ignore

        COMPILED = True
    except ImportError:
        _impl = _py
        COMPILED = False

cm_mul = _impl.cm_mul
tup_add = _impl.tup_add
merge_scaled = _impl.merge_scaled
row_update = _impl.row_update
row_normalize = _impl.row_normalize

PURE = _py
