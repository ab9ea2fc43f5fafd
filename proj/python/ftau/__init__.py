"""Exact arithmetic in the golden mean Thompson group F_t."""

from ._ftau import *  # noqa: F401,F403
from ._ftau import StepLimitExceeded, UserError

__all__ = [name for name in dir() if not name.startswith("_")]
