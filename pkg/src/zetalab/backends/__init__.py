"""Kernel backend selection.

Two interchangeable kernel sets live here: numba_impl (JIT-compiled) and
numpy_impl (pure NumPy/Python). The environment variable ZETALAB_BACKEND
picks one at import time:

    auto   try numba, fall back to numpy if it will not import (default)
    numba  require numba; ImportError propagates if it is missing
    numpy  force the pure NumPy kernels

Each backend is deterministic on its own: repeated calls with identical
arguments return bit-identical results. Across backends, values agree to
roughly 1e-13 relative but not bit for bit, because the NumPy kernels
reduce some blocks pairwise.
"""

from __future__ import annotations

import os
import warnings

from . import numpy_impl

_VALID = ("auto", "numba", "numpy")
_requested = os.environ.get("ZETALAB_BACKEND", "auto").strip().lower()
if _requested not in _VALID:
    raise ValueError(
        f"ZETALAB_BACKEND={_requested!r} not recognised; expected one of {_VALID}"
    )

if _requested in ("auto", "numba"):
    try:
        from . import numba_impl as _active
        ACTIVE_BACKEND = "numba"
    except ImportError:
        if _requested == "numba":
            raise
        warnings.warn(
            "numba is not importable; falling back to the pure NumPy kernels "
            "(set ZETALAB_BACKEND=numpy to silence this warning)",
            RuntimeWarning,
            stacklevel=2,
        )
        _active = numpy_impl
        ACTIVE_BACKEND = "numpy"
else:
    _active = numpy_impl
    ACTIVE_BACKEND = "numpy"

eta_advance = _active.eta_advance
eta_prefix = _active.eta_prefix
power_advance = _active.power_advance
cross_term_pairs = _active.cross_term_pairs
cvz_eta = _active.cvz_eta

__all__ = [
    "ACTIVE_BACKEND",
    "eta_advance",
    "eta_prefix",
    "power_advance",
    "cross_term_pairs",
    "cvz_eta",
    "numpy_impl",
]
