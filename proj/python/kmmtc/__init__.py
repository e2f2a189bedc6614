"""k-sink minimum movement target coverage: shifting-grid solver and exact oracle."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
