"""Core backend selection.

The exact Gaussian-rational scalar ``QQi`` and the innermost term-merge
loops (blade products, polynomial term products) are the hot kernels of
the whole library: every sphere moment, Wick contraction and transform
reduces to them.  A compiled Cython implementation is preferred when
available, with a pure-Python twin as fallback.

Selection is controlled by ``LIERADON_BACKEND``:

* ``auto`` (default): compiled backend if importable, else pure Python
* ``cy``: require the compiled backend (ImportError otherwise)
* ``py``: force the pure-Python backend
"""

from __future__ import annotations

import os

_choice = os.environ.get("LIERADON_BACKEND", "auto").lower()

if _choice not in ("auto", "cy", "py"):
    raise ValueError(f"LIERADON_BACKEND must be auto|cy|py, got {_choice!r}")

if _choice == "py":
    from ._core_py import (QQI_I, QQI_ONE, QQI_ZERO, QQi, blade_sign,
                           mv_add_into, mv_mul_terms, poly_mul_terms)
    BACKEND = "python"
elif _choice == "cy":
    from ._core_cy import (QQI_I, QQI_ONE, QQI_ZERO, QQi, blade_sign,
                           mv_add_into, mv_mul_terms, poly_mul_terms)
    BACKEND = "cython"
else:
    try:
        from ._core_cy import (QQI_I, QQI_ONE, QQI_ZERO, QQi, blade_sign,
                               mv_add_into, mv_mul_terms, poly_mul_terms)
        BACKEND = "cython"
    except ImportError:
        from ._core_py import (QQI_I, QQI_ONE, QQI_ZERO, QQi, blade_sign,
                               mv_add_into, mv_mul_terms, poly_mul_terms)
        BACKEND = "python"

__all__ = ["QQi", "QQI_ZERO", "QQI_ONE", "QQI_I", "BACKEND", "blade_sign",
           "mv_mul_terms", "mv_add_into", "poly_mul_terms"]
