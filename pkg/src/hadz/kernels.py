"""Row-test kernels over uint64 bitmasks, compiled when available.

Set ``HADZ_PURE_PYTHON=1`` to force the numpy implementation.
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernels_py
from .cocycle import r_negative_nibbles
from .group import check_t

MAX_T = 15  # 4t bits must fit in a uint64 with room for the rotation shifts

_compiled = None
if not os.environ.get("HADZ_PURE_PYTHON"):
    try:
        from . import _kernels as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"


def _impl(backend: str | None):
    backend = backend or BACKEND
    if backend == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not available")
        return _compiled
    if backend == "python":
        return _kernels_py
    raise ValueError(f"unknown backend {backend!r}")


def _check(t) -> int:
    t = check_t(t)
    if t > MAX_T:
        raise ValueError(f"bitmask kernels support t <= {MAX_T}, got {t}")
    return t


def test_masks(t, masks, backend: str | None = None) -> np.ndarray:
    """Boolean array marking the group bitmasks that pass the cocyclic row test."""
    t = _check(t)
    return _impl(backend).test_masks(t, masks, r_negative_nibbles())


def scan_product(t, lo, hi, backend: str | None = None) -> np.ndarray:
    """All passing masks of the form ``lo[i] | hi[j]``, ordered by ``j`` then ``i``."""
    t = _check(t)
    return _impl(backend).scan_product(t, lo, hi, r_negative_nibbles())
