"""Toeplitz operators on generalized Fock spaces."""

from ._fockop import *  # noqa: F401,F403
from ._fockop import __version__  # noqa: F401
