"""Hot-kernel backends: compiled extension when built, NumPy fallback otherwise.

The active backend is chosen at import time; set TRACECODE_KERNELS=pure to
force the fallback.  Both backends are exact and return identical arrays.
"""

from __future__ import annotations

import os

from . import pure

try:
    from . import _fast
except ImportError:  # extension not built
    _fast = None

_BACKENDS = {"pure": pure}
if _fast is not None:
    _BACKENDS["fast"] = _fast


def get_backend(name: str | None = None):
    """Return the kernel module for ``name`` (default: best available)."""
    if name is None:
        name = os.environ.get("TRACECODE_KERNELS")
    if name is None:
        name = "fast" if _fast is not None else "pure"
    try:
        return _BACKENDS[name]
    except KeyError:
        raise ValueError(f"unknown kernel backend {name!r}; have {sorted(_BACKENDS)}") from None


def available_backends() -> list:
    return sorted(_BACKENDS)


_active = get_backend()
BACKEND = _active.BACKEND_NAME
weight_counts = _active.weight_counts
char_histograms = _active.char_histograms
