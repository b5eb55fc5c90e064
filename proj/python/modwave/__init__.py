"""Modulational stability of periodic traveling waves."""

from ._core import *  # noqa: F401,F403
from ._core import ModwaveError, __version__  # noqa: F401
