"""Kernel selection: compiled extension when present, pure Python otherwise.

Set ``WALLEDBRAUER_PURE=1`` to force the pure implementation.
"""

import os

if os.environ.get("WALLEDBRAUER_PURE"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels_c as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

IMPLEMENTATION = _impl.IMPLEMENTATION
canon_decorated = _impl.canon_decorated
perm_parity = _impl.perm_parity
word_weight = _impl.word_weight
