"""Metric graphs, moduli strata and the cubical model of T^m/Z2."""

from ._tropmod import *  # noqa: F401,F403
from ._tropmod import TropmodError

__all__ = [name for name in dir() if not name.startswith("_")]
