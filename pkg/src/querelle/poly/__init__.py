"""
Bivariate polynomial algebra: Poly2, formal differentials and resultants.
"""

from ..exact import squarefree_part
from .diffform import DiffForm, eval_diffform, total_differential
from .poly2 import Point, Poly2, homog_component, p2_arith, p2_diff, taylor_shift
from .resultant import det_bareiss, resultant_y, sylvester_matrix

__all__ = [
    "DiffForm",
    "Point",
    "Poly2",
    "det_bareiss",
    "eval_diffform",
    "homog_component",
    "p2_arith",
    "p2_diff",
    "resultant_y",
    "squarefree_part",
    "sylvester_matrix",
    "taylor_shift",
    "total_differential",
]
