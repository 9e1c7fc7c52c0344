"""Kernel dispatch: compiled extension when importable, pure Python otherwise.

Set ``LATSHELL_PURE=1`` in the environment to force the Python kernels.
The compiled kernels pack element sets into 64-bit words, so lattices
with more than 64 elements always take the Python path.
"""

import os

from . import _pykernels
from ._pykernels import MULTIPLE_RISING, NO_RISING, NOT_LEX_FIRST  # noqa: F401

WORD_LIMIT = 64

_ext = None
if not os.environ.get("LATSHELL_PURE"):
    try:
        from . import _ckernels as _ext
    except ImportError:  # extension not built
        _ext = None

BACKEND = "cython" if _ext is not None else "python"


def _pick(n):
    if _ext is not None and n <= WORD_LIMIT:
        return _ext
    return _pykernels


def transitive_closure(n, order, lower):
    return _pick(n).transitive_closure(n, order, lower)


def bound_tables(n, up, down):
    return _pick(n).bound_tables(n, up, down)


def rising_scan(n, order, up, down, upper, labels, sources, target_mask=-1, cond2=True, complete_mask=-1):
    """See :func:`latshell._pykernels.rising_scan`; a mask of -1 means all elements."""
    full = (1 << n) - 1
    if target_mask < 0:
        target_mask = full
    if complete_mask < 0:
        complete_mask = full
    return _pick(n).rising_scan(
        n, order, up, down, upper, labels, sources, target_mask, cond2, complete_mask
    )


def search_labelings(n, order, up, down, upper, slots, sources, targets, completes, before, max_labels):
    return _pick(n).search_labelings(
        n, order, up, down, upper, slots, sources, targets, completes, before, max_labels
    )
