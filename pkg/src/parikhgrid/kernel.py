"""Selects the search kernel at import time.

The compiled extension is preferred when it built; the pure-Python twin is
the fallback and can be forced with PARIKHGRID_PURE_KERNEL=1 (useful for
benchmarking and for debugging kernel parity).
"""

import os

from ._kernel_py import (  # noqa: F401  (re-exported constants)
    ALL_RULES,
    PROGRESS_INTERVAL,
    RULE_CONNECTIVITY,
    RULE_DUPLICATE,
    RULE_LETTER_BUDGET,
    RULE_REMAINING,
)

if os.environ.get("PARIKHGRID_PURE_KERNEL"):
    from . import _kernel_py as _impl
else:
    try:
        from . import _kernel as _impl
    except ImportError:
        from . import _kernel_py as _impl

fixed_length_search = _impl.fixed_length_search
find_covering_naive = _impl.find_covering_naive
KERNEL_NAME = _impl.KERNEL_NAME


def active_kernel():
    """Name of the kernel in use: 'compiled' or 'pure-python'."""
    return KERNEL_NAME
