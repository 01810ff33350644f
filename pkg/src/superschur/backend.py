"""Kernel selection: compiled extension if available, pure Python otherwise.

The active kernel is chosen once at import time.  Set SUPERSCHUR_BACKEND to
"python" or "c" to force a choice ("c" raises if the extension is missing,
so a forced-compiled run never silently degrades).
"""

import os

from . import _terms as _terms_py

try:
    from . import _terms_c
except ImportError:
    _terms_c = None

_FORCED = os.environ.get("SUPERSCHUR_BACKEND", "").strip().lower()

if _FORCED == "python":
    kernel = _terms_py
elif _FORCED == "c":
    if _terms_c is None:
        raise ImportError(
            "SUPERSCHUR_BACKEND=c but the compiled kernel is not installed"
        )
    kernel = _terms_c
elif _FORCED:
    raise ValueError(f"unknown SUPERSCHUR_BACKEND value: {_FORCED!r}")
else:
    kernel = _terms_c if _terms_c is not None else _terms_py

BACKEND_NAME = "c" if kernel is _terms_c else "python"


def available_kernels():
    """Name -> module for every importable kernel (for benchmarks/tests)."""
    found = {"python": _terms_py}
    if _terms_c is not None:
        found["c"] = _terms_c
    return found
