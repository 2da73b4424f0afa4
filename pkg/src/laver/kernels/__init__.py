"""Kernel selection: compiled extension if built, pure Python otherwise.

Set LAVER_PURE=1 to force the fallback (used by the benchmark and by tests
that compare the two implementations).
"""

import os

if os.environ.get("LAVER_PURE"):
    from laver.kernels._fallback import build_rows

    BACKEND = "pure"
else:
    try:
        from laver.kernels._rowbuild import build_rows

        BACKEND = "compiled"
    except ImportError:
        from laver.kernels._fallback import build_rows

        BACKEND = "pure"

__all__ = ["build_rows", "BACKEND"]
