"""Kernel selection: the compiled extension when available, else pure Python.

Set ``QMATHIEU_PURE=1`` to force the fallback.
"""

import os

if os.environ.get("QMATHIEU_PURE"):
    from ._pure import append_letter, canonical_word, mono_mul, normalize_letters, poly_mul
    BACKEND = "python"
else:
    try:
        from ._cy import append_letter, canonical_word, mono_mul, normalize_letters, poly_mul
        BACKEND = "cython"
    except ImportError:
        from ._pure import append_letter, canonical_word, mono_mul, normalize_letters, poly_mul
        BACKEND = "python"

__all__ = ["append_letter", "canonical_word", "mono_mul", "normalize_letters", "poly_mul", "BACKEND"]
