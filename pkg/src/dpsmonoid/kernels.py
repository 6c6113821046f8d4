"""Kernel dispatch: the compiled extension when importable, else pure Python.

Set ``DPSMONOID_PURE=1`` to force the Python kernels.
"""

import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if os.environ.get("DPSMONOID_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        pass

closure_size = _impl.closure_size
search_subsets = _impl.search_subsets
enumerate_cosets = _impl.enumerate_cosets

__all__ = ["BACKEND", "closure_size", "search_subsets", "enumerate_cosets"]
