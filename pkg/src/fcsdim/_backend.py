"""Pick the subset-search kernel at import time.

The compiled extension is used when it was built; setting
``FCSDIM_PURE_PYTHON=1`` forces the numpy fallback.
"""

import os

from fcsdim import _fallback

FALLBACK = "python"
COMPILED = "cython"

try:
    from fcsdim import _kernel
except ImportError:  # extension not built
    _kernel = None


def available() -> tuple[str, ...]:
    return (COMPILED, FALLBACK) if _kernel is not None else (FALLBACK,)


def _default() -> str:
    if os.environ.get("FCSDIM_PURE_PYTHON", "") not in ("", "0") or _kernel is None:
        return FALLBACK
    return COMPILED


BACKEND = _default()


def kernel(name: str | None = None):
    """The ``search_first`` function of the named backend (default: BACKEND)."""
    name = name or BACKEND
    if name == COMPILED:
        if _kernel is None:
            raise RuntimeError("compiled kernel is not built")
        return _kernel.search_first
    if name == FALLBACK:
        return _fallback.search_first
    raise ValueError(f"unknown backend {name!r}")
