"""
Tangent cones and rational singular points.

The multiplicity of a point is the degree of the lowest non-vanishing
homogeneous part of the curve shifted to that point; that part is the tangent
cone, and its real linear factors are the tangent directions.
"""

from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction

from .errors import ConstantCurveError, DegenerateInputError, NotOnCurveError, ZeroPolynomialError
from .exact import UPoly, rational_roots, upoly_gcd
from .leibniz import SlopeEquation, TangentDirection, directions_from_equation, equation_from_form
from .logging_config import get_logger
from .poly import Point, Poly2, resultant_y

logger = get_logger(__name__)


@dataclass(frozen=True)
class TangentCone:
    """
    Attributes:
        at: The point
        k: Multiplicity of the point
        form: Lowest non-vanishing homogeneous part in the shifted variables (u, w)
        equation: Slope equation of the form, m = w/u
        directions: Real directions with multiplicities
    """

    at: Point
    k: int
    form: Poly2
    equation: SlopeEquation
    directions: list[TangentDirection]


@dataclass(frozen=True)
class SingularPointReport:
    point: Point
    multiplicity: int
    cone: TangentCone


class PointKind(StrEnum):
    REGULAR = "regular"
    NODE = "node"
    # double point with a single repeated tangent: cusp or tacnode
    CUSP = "cusp"
    ISOLATED = "isolated"
    ORDINARY_MULTIPLE = "ordinary_multiple"
    MULTIPLE = "multiple"


def _lowest_form(curve: Poly2, at: Point) -> tuple[int, Poly2]:
    if curve.is_zero:
        raise ZeroPolynomialError("the zero polynomial defines no curve")
    value = curve.at(at)
    if value:
        raise NotOnCurveError(at, value)
    shifted = curve.taylor_shift(at)
    k = min(i + j for i, j in shifted.terms)
    return k, shifted.homog_component(k)


def multiplicity_at(curve: Poly2, at: Point) -> int:
    """
    Raises:
        ZeroPolynomialError: for the zero polynomial
        NotOnCurveError: if F(at) != 0
    """
    return _lowest_form(curve, at)[0]


def tangent_cone_at(curve: Poly2, at: Point) -> TangentCone:
    """
    Lowest homogeneous part of the shifted curve and its real directions.

    Raises:
        NotOnCurveError: if F(at) != 0
    """
    k, form = _lowest_form(curve, at)
    equation = equation_from_form(form, iterations_used=0)
    return TangentCone(at=at, k=k, form=form, equation=equation, directions=directions_from_equation(equation))


def verify_singular(curve: Poly2, at: Point) -> bool:
    """True iff F, F_x and F_y all vanish exactly at the point."""
    return all(p.at(at) == 0 for p in (curve, curve.diff("x"), curve.diff("y")))


def classify_point(curve: Poly2, at: Point) -> PointKind:
    cone = tangent_cone_at(curve, at)
    if cone.k == 1:
        return PointKind.REGULAR
    real = cone.directions
    if not real:
        return PointKind.ISOLATED
    simple = all(d.multiplicity == 1 for d in real)
    if cone.k == 2:
        return PointKind.NODE if simple and len(real) == 2 else PointKind.CUSP
    if simple and len(real) == cone.k:
        return PointKind.ORDINARY_MULTIPLE
    return PointKind.MULTIPLE


# ----------------------------------------------------------------------
# Singular point search
# ----------------------------------------------------------------------


def _x_only(p: Poly2) -> UPoly:
    return p.specialize_y(0)


def _candidate_xs(curve: Poly2, fx: Poly2, fy: Poly2) -> list[Fraction]:
    constraints: list[UPoly] = []
    with_y: dict[str, Poly2] = {}
    for name, p in (("f", curve), ("fx", fx), ("fy", fy)):
        if p.is_zero:
            continue
        if p.degree_in("y") < 1:
            constraints.append(_x_only(p))
        else:
            with_y[name] = p

    pairs = [("fx", "fy"), ("f", "fx"), ("f", "fy")]
    available = [(with_y[a], with_y[b]) for a, b in pairs if a in with_y and b in with_y]
    resultants = [resultant_y(a, b) for a, b in available]
    if available and all(r.is_zero for r in resultants):
        raise DegenerateInputError("the curve shares a component with its partial derivatives")
    constraints.extend(r for r in resultants if not r.is_zero)

    common = UPoly()
    for c in constraints:
        common = upoly_gcd(common, c)
    logger.debug(f"candidate x-polynomial for singular points has degree {common.degree}")
    if common.is_zero or common.degree < 1:
        return []
    return rational_roots(common)


def _candidate_ys(polys: list[Poly2], x0: Fraction) -> list[Fraction]:
    common = UPoly()
    for p in polys:
        common = upoly_gcd(common, p.specialize_x(x0))
    if common.is_zero:
        raise DegenerateInputError(f"the whole line x = {x0} is singular")
    if common.degree < 1:
        return []
    return rational_roots(common)


def singular_points_rational(curve: Poly2) -> list[SingularPointReport]:
    """
    Every singular point of the curve with rational coordinates, sorted by (x, y).

    Raises:
        ConstantCurveError: for a constant polynomial
        DegenerateInputError: if the curve shares a component with its partials (not square-free)
    """
    if curve.is_constant:
        raise ConstantCurveError("a constant polynomial defines no curve")
    fx, fy = curve.diff("x"), curve.diff("y")
    points: list[Point] = []
    for x0 in _candidate_xs(curve, fx, fy):
        for y0 in _candidate_ys([curve, fx, fy], x0):
            point = Point(x0, y0)
            if verify_singular(curve, point):
                points.append(point)
    points.sort(key=lambda p: (p.x0, p.y0))
    logger.debug(f"found {len(points)} rational singular points")
    reports = []
    for point in points:
        cone = tangent_cone_at(curve, point)
        reports.append(SingularPointReport(point=point, multiplicity=cone.k, cone=cone))
    return reports
