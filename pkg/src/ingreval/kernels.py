"""Kernel dispatch: the compiled extension when importable, otherwise
the pure-Python reference. Both expose identical contracts, so callers
never branch on the backend; `backend()` reports which one loaded.
"""

from __future__ import annotations

import os
from collections.abc import Sequence

import numpy as np

if os.environ.get("INGREVAL_PURE"):
    from . import _fallback as _impl
    COMPILED = False
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
        COMPILED = True
    except ImportError:
        from . import _fallback as _impl
        COMPILED = False

NOISE = -1


def backend() -> str:
    return "compiled" if COMPILED else "pure-python"


def levenshtein(a: str, b: str) -> int:
    """Unit-cost edit distance between two strings, over code points."""
    return _impl.levenshtein(a, b)


def levenshtein_within(a: str, b: str, limit: int) -> int:
    """Edit distance when it is <= limit, else limit + 1."""
    return _impl.levenshtein_within(a, b, limit)


def dbscan_labels(xs: Sequence[float], ys: Sequence[float],
                  eps: float, min_samples: int) -> list[int]:
    """Cluster labels per point (consecutive from 0; -1 is noise)."""
    if COMPILED:
        ax = np.ascontiguousarray(xs, dtype=np.float64)
        ay = np.ascontiguousarray(ys, dtype=np.float64)
        return _impl.dbscan_labels(ax, ay, float(eps), int(min_samples))
    return _impl.dbscan_labels(list(xs), list(ys), float(eps),
                               int(min_samples))
