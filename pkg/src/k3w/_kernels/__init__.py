"""Hot kernels: the compiled refinement when built, else the pure-Python one.

Set K3W_PURE_PYTHON=1 to force the fallback.
"""

import os

from . import _refine_py

if os.environ.get("K3W_PURE_PYTHON", "") not in ("", "0"):
    refine = _refine_py.refine
    BACKEND = "python"
else:
    try:
        from ._refine_cy import refine  # type: ignore[import-not-found]

        BACKEND = "cython"
    except ImportError:
        refine = _refine_py.refine
        BACKEND = "python"

__all__ = ["refine", "BACKEND"]
