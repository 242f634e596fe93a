"""
Querelle visualization module.

Traces implicit curves by marching squares and draws them as SVG.
"""

from .curves import chord_slope, evaluate, local_slope, render_svg, trace_curve

__all__ = [
    "chord_slope",
    "evaluate",
    "local_slope",
    "render_svg",
    "trace_curve",
]
