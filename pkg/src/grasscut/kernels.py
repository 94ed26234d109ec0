"""Backend selection for the hot numerical kernels.

The compiled extension is preferred when it imported cleanly; setting the
environment variable ``GRASSCUT_PURE_PY=1`` (before import) forces the NumPy
fallback.  Both backends expose the same four functions with identical
semantics:

    det(a)              determinant of a small square complex matrix
    minor_vector(a)     all n-by-n minors of an n-by-N frame, lex order
    gram_det(a, b)      det(a b^H) for two n-by-N frames
    frame_norm(a)       sqrt(det(a a^H))
"""

import os

from . import _kernels_py

if os.environ.get("GRASSCUT_PURE_PY"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels_cy as _impl
    except ImportError:  # pragma: no cover - depends on the build environment
        _impl = _kernels_py

BACKEND = _impl.BACKEND

det = _impl.det
minor_vector = _impl.minor_vector
gram_det = _impl.gram_det
frame_norm = _impl.frame_norm
