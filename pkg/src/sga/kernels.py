"""Kernel dispatch: compiled extension when importable, pure Python otherwise.

Set ``SGA_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _pykernels

BACKEND = "python"
_c = None
if os.environ.get("SGA_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _c

        BACKEND = "cython"
    except ImportError:  # pragma: no cover - depends on the build
        _c = None

# (2k+1)^n must fit a signed 64-bit counter; wider counts use Python ints
_COUNT_LIMIT = 2**62


def count_colorings(n, pos_nbrs, neg_nbrs, loops, k):
    if _c is not None and (2 * k + 1) ** n < _COUNT_LIMIT:
        return _c.count_colorings(n, pos_nbrs, neg_nbrs, loops, k)
    return _pykernels.count_colorings(n, pos_nbrs, neg_nbrs, loops, k)


def mobius(masks, ranks):
    if _c is not None and (not masks or max(masks) < 2**64) and len(masks) < 2**20:
        return _c.mobius(masks, ranks)
    return _pykernels.mobius(masks, ranks)
