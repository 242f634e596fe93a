"""
Querelle CLI - exact tangents and subtangents of plane algebraic curves.
"""

__all__ = ["app", "run"]

from .main import app, run
