"""
Slice algorithm for tangents.

Substituting x -> x + n v and y -> y + n z in F and grouping by powers of n
splits the equation into slices. The k-th slice is produced by the rewriting
rule applied k times to every term: multiply by the exponent of y and replace
one y by z, plus the same with x and v. At a point of the curve the first slice
that does not vanish, read as a homogeneous polynomial in (v, z), carries the
tangent directions z/v.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateAllSlicesVanishError, NotOnCurveError
from .leibniz import (
    SlopeEquation,
    Subtangent,
    SubtangentConvention,
    TangentDirection,
    directions_from_equation,
    equation_from_form,
    subtangents_for,
)
from .logging_config import get_logger
from .poly import Point, Poly2

logger = get_logger(__name__)

# exponents of x, y, v, z
type _Term = tuple[int, int, int, int]


@dataclass(frozen=True)
class SliceSequence:
    """
    Slices of a curve at a point.

    Attributes:
        at: The point
        slices: Slice k (k >= 1) as a homogeneous Poly2 of degree k in (v, z)
        first_nonzero: Least k with a non-vanishing slice, None when all vanish
    """

    at: Point
    slices: dict[int, Poly2]
    first_nonzero: int | None


def _lift(curve: Poly2) -> dict[_Term, Fraction]:
    return {(i, j, 0, 0): c for (i, j), c in curve.terms.items()}


def _rewrite(terms: dict[_Term, Fraction]) -> dict[_Term, Fraction]:
    """One application of the rule: c x^i y^j v^a z^b -> c j x^i y^(j-1) v^a z^(b+1) + c i x^(i-1) y^j v^(a+1) z^b."""
    out: dict[_Term, Fraction] = {}
    for (i, j, a, b), c in terms.items():
        if j:
            key = (i, j - 1, a, b + 1)
            out[key] = out.get(key, Fraction(0)) + c * j
        if i:
            key = (i - 1, j, a + 1, b)
            out[key] = out.get(key, Fraction(0)) + c * i
    return {key: c for key, c in out.items() if c}


def _at_point(terms: dict[_Term, Fraction], at: Point) -> Poly2:
    acc: dict[tuple[int, int], Fraction] = {}
    for (i, j, a, b), c in terms.items():
        acc[(a, b)] = acc.get((a, b), Fraction(0)) + c * at.x0**i * at.y0**j
    return Poly2(acc)


def slice_at(curve: Poly2, at: Point, k: int) -> Poly2:
    """
    The k-th slice of the curve at the point, a form of degree k in (v, z).

    Raises:
        ValueError: if k < 1
    """
    if k < 1:
        raise ValueError("slices are numbered from 1")
    terms = _lift(curve)
    for _ in range(k):
        terms = _rewrite(terms)
    return _at_point(terms, at)


def slice_sequence(curve: Poly2, at: Point) -> SliceSequence:
    """All slices up to the degree of the curve."""
    terms = _lift(curve)
    slices: dict[int, Poly2] = {}
    first: int | None = None
    for k in range(1, curve.total_degree + 1):
        terms = _rewrite(terms)
        slices[k] = _at_point(terms, at)
        if first is None and not slices[k].is_zero:
            first = k
    return SliceSequence(at=at, slices=slices, first_nonzero=first)


def arranged_equality(curve: Poly2, at: Point) -> list[Poly2]:
    """
    F(x0 + n v, y0 + n z) expanded directly and arranged by powers of n.

    Entry k is the coefficient of n^k, a form of degree k in (v, z); entry 0 is F(at).
    """
    degree = max(curve.total_degree, 0)
    rows: list[dict[tuple[int, int], Fraction]] = [{} for _ in range(degree + 1)]
    for (i, j), c in curve.terms.items():
        for a in range(i + 1):
            cx = c * math.comb(i, a) * at.x0 ** (i - a)
            for b in range(j + 1):
                cy = cx * math.comb(j, b) * at.y0 ** (j - b)
                row = rows[a + b]
                row[(a, b)] = row.get((a, b), Fraction(0)) + cy
    return [Poly2(row) for row in rows]


def _first_slice(curve: Poly2, at: Point) -> tuple[int, Poly2]:
    value = curve.at(at)
    if value:
        raise NotOnCurveError(at, value)
    sequence = slice_sequence(curve, at)
    if sequence.first_nonzero is None:
        raise DegenerateAllSlicesVanishError(f"every slice vanishes at {at}")
    logger.debug(f"first non-vanishing slice at {at} is number {sequence.first_nonzero}")
    return sequence.first_nonzero, sequence.slices[sequence.first_nonzero]


def rolle_directions(curve: Poly2, at: Point) -> SlopeEquation:
    """
    Slope equation read from the first non-vanishing slice with m = z/v.

    Raises:
        NotOnCurveError: if F(at) != 0
        DegenerateAllSlicesVanishError: if no slice survives
    """
    k, form = _first_slice(curve, at)
    return equation_from_form(form, iterations_used=k)


def tangent_directions_rolle(curve: Poly2, at: Point) -> list[TangentDirection]:
    return directions_from_equation(rolle_directions(curve, at))


def rolle_subtangents(
    curve: Poly2,
    at: Point,
    convention: SubtangentConvention = SubtangentConvention.PROJECTION,
) -> list[Subtangent]:
    """Subtangent y0 v/z (or x0 z/v) for every real direction (v : z)."""
    return subtangents_for(tangent_directions_rolle(curve, at), at, convention)
