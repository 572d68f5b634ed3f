"""Closure-kernel backend selection.

The compiled extension is preferred when importable; HORNKEYS_PURE=1 forces
the pure-Python engine (decided once at import time).
"""

import os

if os.environ.get("HORNKEYS_PURE") == "1":
    from ._closure_py import Engine

    BACKEND = "python"
else:
    try:
        from ._fastclosure import Engine  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        from ._closure_py import Engine  # type: ignore[no-redef]

        BACKEND = "python"

__all__ = ["Engine", "BACKEND"]
