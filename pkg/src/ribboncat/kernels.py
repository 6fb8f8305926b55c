"""Backend selection for the integer hot kernels.

The compiled extension ``ribboncat._ckernels`` is used when it imports;
otherwise, or when ``RIBBONCAT_PURE_PYTHON=1`` is set, the numpy/pure-Python
versions in :mod:`ribboncat._pykernels` are used.
"""

from __future__ import annotations

import os

from . import _pykernels

python_backend = _pykernels

try:
    if os.environ.get("RIBBONCAT_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure-Python backend requested")
    from . import _ckernels as _active
except ImportError:
    compiled_backend = None
    _active = _pykernels
else:
    compiled_backend = _active

BACKEND: str = _active.BACKEND
associativity_violation = _active.associativity_violation
extended_hom_matrix = _active.extended_hom_matrix
gram_factorizations = _active.gram_factorizations

__all__ = [
    "BACKEND",
    "associativity_violation",
    "extended_hom_matrix",
    "gram_factorizations",
    "python_backend",
    "compiled_backend",
]
