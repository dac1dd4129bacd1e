"""Variational cMPS simulation of interacting 1D bosons from driven-cavity output."""

from ._vcmps import *  # noqa: F401,F403
from ._vcmps import __version__  # noqa: F401
