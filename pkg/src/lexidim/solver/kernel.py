"""Backend selection for the multicover search kernels.

The compiled ``_ckernel`` is used when it imports and the instance fits in
64-bit masks; otherwise the pure-Python kernel runs.  Setting
``LEXIDIM_PURE_PYTHON=1`` forces the fallback.
"""

from __future__ import annotations

import os

from . import _pykernel

_ckernel = None
if os.environ.get("LEXIDIM_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernel  # type: ignore[no-redef]
    except ImportError:
        _ckernel = None

BACKEND = "cython" if _ckernel is not None else "python"
MAX_COMPILED_ORDER = 64


def _pick(n: int, backend: str | None):
    backend = backend or BACKEND
    if backend == "cython":
        if _ckernel is None:
            raise RuntimeError("compiled kernel is not available")
        if n <= MAX_COMPILED_ORDER:
            return _ckernel
    return _pykernel


def branch_and_bound(cons, k, n, forced, upper, upper_mask, backend=None):
    return _pick(n, backend).branch_and_bound(list(cons), k, n, forced, upper, upper_mask)


def lex_solutions(cons, k, n, forced, target, limit, backend=None):
    return _pick(n, backend).lex_solutions(list(cons), k, n, forced, target, limit)


def available_backends() -> list[str]:
    return ["python"] + (["cython"] if _ckernel is not None else [])
