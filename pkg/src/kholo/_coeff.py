"""Coefficient backend selection.

The compiled kernel is used when its extension module was built; otherwise the
pure-Python twin takes over.  Set ``KHOLO_PURE_KERNEL=1`` to force the pure
implementation (the benchmark and the equivalence tests rely on this).
"""

import os

if os.environ.get("KHOLO_PURE_KERNEL"):
    from kholo import _gqpure as _impl
else:
    try:
        from kholo import _gqkernel as _impl  # type: ignore[no-redef]
    except ImportError:
        from kholo import _gqpure as _impl

GaussianRational = _impl.GaussianRational
terms_add = _impl.terms_add
terms_sub = _impl.terms_sub
terms_scale = _impl.terms_scale
terms_mul = _impl.terms_mul
BACKEND = _impl.BACKEND_NAME
