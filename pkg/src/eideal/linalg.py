"""Exact integer matrix rank with a compiled fast path.

The compiled Bareiss kernel (Cython, int64 with an overflow guard) is used
when it was built and ``EIDEAL_PURE_PYTHON`` is not set; any overflow or a
missing extension falls back to the pure-Python arbitrary-precision
implementation.  Both routes compute the exact rank over the rationals.
"""

from __future__ import annotations

import os

from . import _rank_py

try:
    from . import _rankcore  # type: ignore[attr-defined]
except ImportError:  # extension not built
    _rankcore = None

USING_EXTENSION = (
    _rankcore is not None and os.environ.get("EIDEAL_PURE_PYTHON", "") != "1"
)

if USING_EXTENSION:
    import numpy as _np


def matrix_rank(rows: list[list[int]]) -> int:
    """Rank over Q of an integer matrix given as a list of rows."""
    if not rows or not rows[0]:
        return 0
    if USING_EXTENSION:
        try:
            arr = _np.array(rows, dtype=_np.int64)
            return _rankcore.rank_int64(arr)
        except OverflowError:
            pass
    return _rank_py.rank(rows)
