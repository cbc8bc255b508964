"""Penalty-tight QUBO and reduced-QUBO models of weighted max k-cut."""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
