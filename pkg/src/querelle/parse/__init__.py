"""Curve text format: parsing and rendering."""

from .parser import CurveSpec, parse_curve, parse_polynomial, tokenize
from .render import render, render_differentials, render_diffform, render_upoly

__all__ = [
    "CurveSpec",
    "parse_curve",
    "parse_polynomial",
    "render",
    "render_differentials",
    "render_diffform",
    "render_upoly",
    "tokenize",
]
