"""
The differential method.

The slope of F = 0 is the quotient dy/dx = -F_x / F_y. At a multiple point both
terms vanish; the quotient is then replaced by the quotient of the differentials
of numerator and denominator, with dx and dy held constant, until one of them
survives at the point. Writing dy = m dx in the surviving relation gives the
slope equation.
"""

import functools
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction

from .errors import (
    ConstantCurveError,
    DegenerateAllDerivativesVanishError,
    InfiniteSubtangentError,
    NotIndeterminateError,
    NotOnCurveError,
)
from .exact import IsolatedRoot, UPoly, isolate_roots, rational_content, squarefree_decomposition
from .logging_config import get_logger
from .poly import DiffForm, Point, Poly2

logger = get_logger(__name__)


# ----------------------------------------------------------------------
# Types
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class ImplicitSlope:
    """
    The slope quotient num/den = -F_x/F_y with common positive content removed.

    Attributes:
        num: Numerator, a positive multiple of -F_x
        den: Denominator, the same multiple of F_y
        curve: The curve polynomial F
    """

    num: Poly2
    den: Poly2
    curve: Poly2


@dataclass(frozen=True)
class Finite:
    value: Fraction

    kind = "finite"


@dataclass(frozen=True)
class InfiniteVertical:
    kind = "infinite_vertical"


@dataclass(frozen=True)
class Indeterminate00:
    kind = "indeterminate_0_0"


type QuotientClass = Finite | InfiniteVertical | Indeterminate00


@dataclass(frozen=True)
class SlopeEquation:
    """
    Tangent directions at a point as a polynomial in the slope m = dy/dx.

    Attributes:
        poly_m: Primitive integer polynomial with positive leading coefficient (1 when
            every direction is vertical)
        vertical_multiplicity: Number of vertical directions, counted with multiplicity
        iterations_used: How many times the differential was applied before a
            non-vanishing relation appeared
    """

    poly_m: UPoly
    vertical_multiplicity: int
    iterations_used: int

    @property
    def multiplicity(self) -> int:
        return self.poly_m.degree + self.vertical_multiplicity


@dataclass(frozen=True)
class TangentDirection:
    """A real tangent direction; slope None marks the vertical direction."""

    slope: IsolatedRoot | None
    multiplicity: int

    @property
    def is_vertical(self) -> bool:
        return self.slope is None

    def same_as(self, other: "TangentDirection") -> bool:
        if self.multiplicity != other.multiplicity:
            return False
        if self.slope is None or other.slope is None:
            return self.slope is None and other.slope is None
        return self.slope == other.slope


class SubtangentConvention(StrEnum):
    """
    How the subtangent is read from the slope.

    PROJECTION is the geometric subtangent t = y dx/dy, the signed length from the
    tangent's x-intercept to the foot of the ordinate. ALTERNATE is t = x dy/dx.
    The values are the names used on the command line and in reports.
    """

    PROJECTION = "footnote21"
    ALTERNATE = "alternate_x_dydx"


@dataclass(frozen=True)
class Subtangent:
    """
    A finite subtangent; a vertical tangent is reported as value 0 with the vertical flag.
    """

    value: IsolatedRoot
    convention: SubtangentConvention
    vertical: bool = False


@dataclass(frozen=True)
class LhopitalStep:
    """One iterate: the k-th differentials of numerator and denominator and their values at the point."""

    k: int
    num_form: DiffForm
    den_form: DiffForm
    num_value: Poly2
    den_value: Poly2

    @property
    def vanishes(self) -> bool:
        return self.num_value.is_zero and self.den_value.is_zero


@dataclass(frozen=True)
class LhopitalTrace:
    """Every iterate, the surviving relation dy * den - dx * num and the slope equation read from it."""

    steps: list[LhopitalStep]
    relation: Poly2
    equation: SlopeEquation


# ----------------------------------------------------------------------
# Quotient and its classification
# ----------------------------------------------------------------------


def implicit_slope(curve: Poly2) -> ImplicitSlope:
    """
    Build the slope quotient of a curve.

    Raises:
        ConstantCurveError: if the curve polynomial is constant
    """
    if curve.is_constant:
        raise ConstantCurveError("a constant polynomial defines no curve")
    num = -curve.diff("x")
    den = curve.diff("y")
    content = rational_content([*num.terms.values(), *den.terms.values()])
    return ImplicitSlope(num=num.scale(1 / content), den=den.scale(1 / content), curve=curve)


def classify_quotient(s: ImplicitSlope, at: Point) -> QuotientClass:
    num, den = s.num.at(at), s.den.at(at)
    if den:
        return Finite(num / den)
    if num:
        return InfiniteVertical()
    return Indeterminate00()


def indeterminacy_witnesses(samples: list[Fraction | int]) -> list[tuple[Fraction, Fraction]]:
    """
    Pairs (b, b * 0): every sample b satisfies 0 = b * 0, so 0/0 names no particular value.
    """
    return [(Fraction(b), Fraction(b) * 0) for b in samples]


# ----------------------------------------------------------------------
# The iteration
# ----------------------------------------------------------------------


def _check_on_curve(curve: Poly2, at: Point) -> None:
    value = curve.at(at)
    if value:
        raise NotOnCurveError(at, value)


def _iterate(num: Poly2, den: Poly2, at: Point, bound: int) -> list[LhopitalStep]:
    """Differentiate numerator and denominator until one survives at the point."""
    n_form, d_form = DiffForm.from_poly(num), DiffForm.from_poly(den)
    steps: list[LhopitalStep] = []
    for k in range(bound + 1):
        step = LhopitalStep(k, n_form, d_form, n_form.evaluate(at), d_form.evaluate(at))
        steps.append(step)
        if not step.vanishes:
            logger.debug(f"quotient resolved after {k} differentiations at {at}")
            return steps
        n_form, d_form = n_form.differential(), d_form.differential()
    raise DegenerateAllDerivativesVanishError(
        f"numerator and denominator vanish at {at} through differential degree {bound}"
    )


def _relation(num_value: Poly2, den_value: Poly2) -> Poly2:
    """dy * den - dx * num as a form in (dx, dy): its zeros with dy = m dx are the slopes."""
    dx, dy = Poly2.x(), Poly2.y()
    return dy * den_value - dx * num_value


def _normalized(g: UPoly) -> UPoly:
    return UPoly([1]) if g.degree < 1 else g.primitive()


def equation_from_form(form: Poly2, iterations_used: int) -> SlopeEquation:
    """
    Slope equation of a nonzero homogeneous form in (horizontal, vertical) variables.

    Setting the horizontal variable to 1 leaves a polynomial in the slope; the
    degree it loses is the multiplicity of the vertical direction.
    """
    g = form.dehomogenize()
    return SlopeEquation(
        poly_m=_normalized(g),
        vertical_multiplicity=form.total_degree - g.degree,
        iterations_used=iterations_used,
    )


def lhopital_trace(s: ImplicitSlope, at: Point) -> LhopitalTrace:
    """
    Run the iteration and keep every iterate.

    Raises:
        NotOnCurveError: if F(at) != 0
        DegenerateAllDerivativesVanishError: if every iterate vanishes up to the degree of F
    """
    _check_on_curve(s.curve, at)
    steps = _iterate(s.num, s.den, at, s.curve.total_degree)
    last = steps[-1]
    relation = _relation(last.num_value, last.den_value)
    if relation.is_zero:
        raise DegenerateAllDerivativesVanishError(f"the slope relation vanishes identically at {at}")
    return LhopitalTrace(steps=steps, relation=relation, equation=equation_from_form(relation, last.k))


def lhopital_iterate(s: ImplicitSlope, at: Point) -> SlopeEquation:
    return lhopital_trace(s, at).equation


# ----------------------------------------------------------------------
# Directions and subtangents
# ----------------------------------------------------------------------


def _compare_directions(a: TangentDirection, b: TangentDirection) -> int:
    if a.slope is None or b.slope is None:
        return (a.slope is None) - (b.slope is None)
    return a.slope.compare(b.slope)


def directions_from_equation(eq: SlopeEquation) -> list[TangentDirection]:
    """Real roots of the slope equation with multiplicities, ascending, vertical last."""
    directions: list[TangentDirection] = []
    for factor, multiplicity in squarefree_decomposition(eq.poly_m):
        directions.extend(TangentDirection(root, multiplicity) for root in isolate_roots(factor))
    directions.sort(key=functools.cmp_to_key(_compare_directions))
    if eq.vertical_multiplicity:
        directions.append(TangentDirection(None, eq.vertical_multiplicity))
    return directions


def tangent_directions_leibniz(curve: Poly2, at: Point) -> list[TangentDirection]:
    return directions_from_equation(lhopital_iterate(implicit_slope(curve), at))


def subtangent(
    at: Point,
    slope: IsolatedRoot | Fraction | int | None,
    convention: SubtangentConvention = SubtangentConvention.PROJECTION,
) -> Subtangent:
    """
    Subtangent at a point for a tangent of the given slope (None for vertical).

    Raises:
        InfiniteSubtangentError: for a horizontal tangent off the x-axis (projection), or a
            vertical tangent (alternate)
    """
    if slope is not None and not isinstance(slope, IsolatedRoot):
        slope = IsolatedRoot.from_rational(slope)
    if convention is SubtangentConvention.ALTERNATE:
        if slope is None:
            raise InfiniteSubtangentError(f"x dy/dx is infinite for the vertical tangent at {at}")
        return Subtangent(slope.scaled(at.x0), convention)
    if slope is None:
        return Subtangent(IsolatedRoot.from_rational(0), convention, vertical=True)
    if slope.exact_rational == 0:
        if at.y0:
            raise InfiniteSubtangentError(f"horizontal tangent at {at} never meets the x-axis")
        return Subtangent(IsolatedRoot.from_rational(0), convention)
    return Subtangent(slope.reciprocal_scaled(at.y0), convention)


def subtangents_for(
    directions: list[TangentDirection],
    at: Point,
    convention: SubtangentConvention = SubtangentConvention.PROJECTION,
) -> list[Subtangent]:
    return [subtangent(at, d.slope, convention) for d in directions]


def resolve_zero_over_zero(num: Poly2, den: Poly2, at: Point) -> list[IsolatedRoot | None]:
    """
    The values a 0/0 quotient takes under the differential iteration (None for infinity).

    Powers of dx shared by both surviving differentials are cancelled before the
    relation is formed, so num = den = x gives the single value 1.

    Raises:
        NotIndeterminateError: if num or den does not vanish at the point
        DegenerateAllDerivativesVanishError: if the iteration never resolves the quotient
    """
    if num.at(at) or den.at(at):
        raise NotIndeterminateError(f"{num.at(at)}/{den.at(at)} at {at} is not 0/0")
    bound = max(num.total_degree, den.total_degree)
    last = _iterate(num, den, at, bound)[-1]
    shared = min(_dx_order(last.num_value), _dx_order(last.den_value))
    relation = _relation(_drop_dx(last.num_value, shared), _drop_dx(last.den_value, shared))
    if relation.is_zero:
        raise DegenerateAllDerivativesVanishError(f"the quotient takes every value at {at}")
    return [d.slope for d in directions_from_equation(equation_from_form(relation, last.k))]


def _dx_order(form: Poly2) -> int:
    return min((i for i, _ in form.terms), default=10**9)


def _drop_dx(form: Poly2, power: int) -> Poly2:
    return Poly2({(i - power, j): c for (i, j), c in form.terms.items()})
