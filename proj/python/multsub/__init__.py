"""Subgroup counts G(n), I(n) of (Z/nZ)^x and the statistics around them."""

from ._core import *  # noqa: F401,F403
from ._core import Error, FunctionTable

__version__ = "0.1.0"
