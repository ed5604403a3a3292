"""Fragility distributions of exceedance counts.

Exact discrete laws, limit fragility distributions, conditional compound
Poisson / negative binomial approximations and their Stein-factor error
bounds. The heavy lifting lives in the compiled ``_fragdist`` module.
"""

from ._fragdist import *  # noqa: F401,F403
from ._fragdist import __doc__ as _doc

__doc__ = _doc
__version__ = "0.1.0"
