"""4x4 lattice states: PPT census, positive-map semigroup detection,
separability certificates."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
__doc__ = _core_doc
