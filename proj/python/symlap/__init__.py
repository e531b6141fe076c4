"""Symmetric-Laplacian density matrices, their entropies and bound checks."""

from ._symlap import *  # noqa: F401,F403
from ._symlap import __version__

__all__ = [name for name in dir() if not name.startswith("_")]
