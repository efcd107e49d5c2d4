"""Kernel backend selection.

The compiled Cython extension is preferred; the pure-Python/numpy module
is the fallback.  ``CHANGEKIT_BACKEND=python`` (or ``compiled``) forces a
choice, which the benchmark suite uses to compare the two.
"""
import os

_requested = os.environ.get("CHANGEKIT_BACKEND", "auto").lower()

if _requested not in ("auto", "compiled", "python"):
    raise ImportError(f"CHANGEKIT_BACKEND must be 'compiled' or 'python', got {_requested!r}")

if _requested == "python":
    from . import _kernels_py as kernels

    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        if _requested == "compiled":
            raise
        from . import _kernels_py as kernels  # type: ignore[no-redef]

        BACKEND = "python"
