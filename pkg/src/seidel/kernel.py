"""Backend selection for the canonization kernel.

The compiled extension mirrors :mod:`seidel._canon_py` for graphs on at
most 63 vertices.  It is used when importable unless the environment
variable ``SEIDEL_BACKEND`` forces a choice (``compiled`` or ``pure``).
Graphs too large for the compiled kernel fall back to the pure one.
"""

from __future__ import annotations

import os

from . import _canon_py

_COMPILED_LIMIT = 63

_forced = os.environ.get("SEIDEL_BACKEND", "").strip().lower()
if _forced not in {"", "compiled", "pure"}:
    raise ImportError(f"SEIDEL_BACKEND must be 'compiled' or 'pure', got {_forced!r}")

_compiled = None
if _forced != "pure":
    try:
        from . import _canon_c as _compiled  # type: ignore[attr-defined]
    except ImportError:
        _compiled = None
        if _forced == "compiled":
            raise

masks_from_key = _canon_py.masks_from_key
relabel_masks = _canon_py.relabel_masks
group_order = _canon_py.group_order


def backend_name() -> str:
    """Name of the kernel answering canonization calls, compiled or pure."""
    return "compiled" if _compiled is not None else "pure"


def canonical_order(n, masks, bound=None):
    """Dispatch :func:`seidel._canon_py.canonical_order` to the active backend."""
    if _compiled is not None and n <= _COMPILED_LIMIT:
        return _compiled.canonical_order(n, masks, bound)
    return _canon_py.canonical_order(n, masks, bound)


def canonical_key(n, masks):
    """Canonical code sequence of the graph under the active backend."""
    return canonical_order(n, masks)[0]
