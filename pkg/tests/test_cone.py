"""
Tests for tangent cones, point classification and the rational singular-point search.
"""

from fractions import Fraction

import pytest

from querelle.cone import (
    PointKind,
    classify_point,
    multiplicity_at,
    singular_points_rational,
    tangent_cone_at,
    verify_singular,
)
from querelle.errors import ConstantCurveError, DegenerateInputError, NotOnCurveError, ZeroPolynomialError
from querelle.exact import UPoly
from querelle.parse import parse_curve
from querelle.poly import Point, Poly2

X, Y = Poly2.x(), Poly2.y()
ORIGIN = Point(0, 0)


@pytest.mark.unit
class TestTangentCone:
    """Test multiplicity and lowest forms."""

    def test_quartic_double_point(self, quartic, double_point):
        cone = tangent_cone_at(quartic, double_point)
        assert cone.k == 2
        assert cone.form == 4 * X**2 - 32 * Y**2
        assert cone.equation.poly_m == UPoly([-1, 0, 8])
        assert [d.slope.to_decimal(12) for d in cone.directions] == ["-0.353553390593", "0.353553390593"]

    def test_multiplicity(self, quartic, double_point, circle):
        assert multiplicity_at(quartic, double_point) == 2
        assert multiplicity_at(quartic, ORIGIN) == 1
        assert multiplicity_at(circle, Point(3, -4)) == 1
        assert multiplicity_at(Y * (Y - X) * (Y + X), ORIGIN) == 3

    def test_not_on_curve(self, quartic):
        with pytest.raises(NotOnCurveError):
            multiplicity_at(quartic, Point(1, 1))

    def test_zero_polynomial(self):
        with pytest.raises(ZeroPolynomialError):
            multiplicity_at(Poly2(), ORIGIN)

    def test_vertical_direction(self, quartic):
        cone = tangent_cone_at(quartic, ORIGIN)
        assert cone.equation.vertical_multiplicity == 1
        assert cone.directions[-1].is_vertical


@pytest.mark.unit
class TestClassifyPoint:
    """Test naming of points by their tangent cone."""

    @pytest.mark.parametrize(
        ("text", "at", "kind"),
        [
            ("x^2 + y^2 = 25", Point(3, 4), PointKind.REGULAR),
            ("y^2 = x^2 (x + 1)", ORIGIN, PointKind.NODE),
            ("y^2 = x^3", ORIGIN, PointKind.CUSP),
            ("(y - x^2)(y + x^2)", ORIGIN, PointKind.CUSP),
            ("x^2 + y^2 + x^3", ORIGIN, PointKind.ISOLATED),
            ("y (y - x)(y + x) + x^4", ORIGIN, PointKind.ORDINARY_MULTIPLE),
            ("x y^2 + x^4 + y^4", ORIGIN, PointKind.MULTIPLE),
        ],
    )
    def test_kinds(self, text, at, kind):
        assert classify_point(parse_curve(text).poly, at) is kind

    def test_quartic(self, quartic, double_point):
        assert classify_point(quartic, double_point) is PointKind.NODE

    def test_verify_singular(self, quartic, double_point):
        assert verify_singular(quartic, double_point)
        assert not verify_singular(quartic, ORIGIN)
        assert not verify_singular(quartic, Point(1, 1))


@pytest.mark.unit
class TestSingularPoints:
    """Test the rational singular-point search."""

    def test_quartic(self, quartic, double_point):
        reports = singular_points_rational(quartic)
        assert [r.point for r in reports] == [double_point]
        assert reports[0].multiplicity == 2
        assert reports[0].cone.form == 4 * X**2 - 32 * Y**2

    def test_smooth_curves(self, parabola, circle):
        assert singular_points_rational(parabola) == []
        assert singular_points_rational(circle) == []

    def test_two_circles(self):
        curve = parse_curve("(x^2 + y^2 - 25)((x - 6)^2 + y^2 - 25)").poly
        reports = singular_points_rational(curve)
        assert [r.point for r in reports] == [Point(3, -4), Point(3, 4)]
        assert all(r.multiplicity == 2 for r in reports)

    def test_horizontal_line_component(self):
        curve = Y * (Y - X**2)
        assert [r.point for r in singular_points_rational(curve)] == [ORIGIN]

    def test_cusp(self, cusp):
        (report,) = singular_points_rational(cusp)
        assert report.point == ORIGIN
        assert report.cone.directions[0].multiplicity == 2

    @pytest.mark.parametrize("shift", [Point(Fraction(1, 3), -2), Point(-5, Fraction(7, 2))])
    def test_translation_moves_singular_points(self, quartic, shift):
        curves = [quartic, parse_curve("(x^2 + y^2 - 25)((x - 6)^2 + y^2 - 25)").poly, Y * (Y - X**2)]
        for curve in curves:
            before = singular_points_rational(curve)
            after = singular_points_rational(curve.taylor_shift(shift))
            expected = [Point(r.point.x0 - shift.x0, r.point.y0 - shift.y0) for r in before]
            assert [r.point for r in after] == expected
            assert [r.multiplicity for r in after] == [r.multiplicity for r in before]
            assert [r.cone.form for r in after] == [r.cone.form for r in before]

    def test_repeated_component(self):
        with pytest.raises(DegenerateInputError):
            singular_points_rational(parse_curve("(y - x)^2").poly)

    def test_constant(self):
        with pytest.raises(ConstantCurveError):
            singular_points_rational(Poly2.constant(1))

    @pytest.mark.slow
    def test_planted_corpus(self, planted_corpus):
        for sample in planted_corpus:
            reports = singular_points_rational(sample.curve)
            assert [r.point for r in reports] == [sample.at]
            assert reports[0].multiplicity == sample.k
