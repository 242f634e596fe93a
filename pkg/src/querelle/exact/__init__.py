"""
Exact arithmetic layer: rationals, univariate polynomials and real-root isolation.
"""

from .rational import common_denominator, rational_arith, rational_content, sign
from .roots import (
    DEFAULT_DISPLAY_WIDTH,
    IsolatedRoot,
    cauchy_bound,
    isolate_roots,
    rational_roots,
    refine,
    sturm_chain,
    sturm_count,
)
from .upoly import UPoly, squarefree_decomposition, squarefree_part, upoly_gcd

__all__ = [
    "DEFAULT_DISPLAY_WIDTH",
    "IsolatedRoot",
    "UPoly",
    "cauchy_bound",
    "common_denominator",
    "isolate_roots",
    "rational_arith",
    "rational_content",
    "rational_roots",
    "refine",
    "sign",
    "squarefree_decomposition",
    "squarefree_part",
    "sturm_chain",
    "sturm_count",
    "upoly_gcd",
]
