"""Spectral filters for nonhomogeneous linear PDEs on continuous-variable
quantum hardware.

Everything lives in the compiled extension; this package re-exports it.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
