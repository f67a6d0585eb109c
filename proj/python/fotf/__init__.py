"""Fractional-order pole-zero cancellation toolkit.

Thin Python wrapper over the C++ core; everything public lives in the
compiled module.
"""

try:
    from ._fotf import *  # noqa: F401,F403  (installed wheel layout)
    from ._fotf import __doc__ as _core_doc
except ImportError:  # in-tree build: _fotf sits next to the package on sys.path
    from _fotf import *  # noqa: F401,F403
    from _fotf import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
