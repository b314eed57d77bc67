"""Exact real-zero certificates and amalgamation tools."""

from ._core import *  # noqa: F401,F403
from ._core import GuardError, InputError, ParseError, Polynomial, PreconditionError, Matroid

__all__ = [name for name in dir() if not name.startswith("_")]
