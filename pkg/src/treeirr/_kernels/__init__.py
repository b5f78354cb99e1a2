"""Kernel backend selection.

The hot loops (free-tree generation, canonical codes, index sums) exist
twice: a Cython extension (``_ckernels``) and a pure-Python twin
(``_pykernels``) with identical semantics. The compiled one is used when
importable; set ``TREEIRR_KERNELS=python`` or ``TREEIRR_KERNELS=cython``
to force a backend (forcing ``cython`` raises if the extension is absent).
"""

import os

_choice = os.environ.get("TREEIRR_KERNELS", "auto").strip().lower()

if _choice in ("python", "py", "pure"):
    from . import _pykernels as _impl
elif _choice in ("cython", "c", "compiled"):
    from . import _ckernels as _impl
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        from . import _pykernels as _impl

BACKEND = _impl.BACKEND
level_sequences = _impl.level_sequences
canon_code = _impl.canon_code
index_bundle = _impl.index_bundle

__all__ = ["BACKEND", "level_sequences", "canon_code", "index_bundle"]
