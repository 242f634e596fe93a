"""
Tests for the differential method: slope quotient, 0/0 classification, iteration, subtangents.
"""

import random
from fractions import Fraction

import pytest

from querelle.errors import (
    ConstantCurveError,
    DegenerateAllDerivativesVanishError,
    InfiniteSubtangentError,
    NotIndeterminateError,
    NotOnCurveError,
)
from querelle.exact import IsolatedRoot, UPoly
from querelle.leibniz import (
    Finite,
    Indeterminate00,
    InfiniteVertical,
    SlopeEquation,
    SubtangentConvention,
    TangentDirection,
    classify_quotient,
    directions_from_equation,
    implicit_slope,
    indeterminacy_witnesses,
    lhopital_iterate,
    lhopital_trace,
    resolve_zero_over_zero,
    subtangent,
    subtangents_for,
    tangent_directions_leibniz,
)
from querelle.parse import parse_curve
from querelle.poly import Point, Poly2

X, Y = Poly2.x(), Poly2.y()
ORIGIN = Point(0, 0)


@pytest.mark.unit
class TestImplicitSlope:
    """Test construction of the slope quotient."""

    def test_quartic_quotient(self, quartic):
        s = implicit_slope(quartic)
        assert s.num == 3 * Y**2 - 12 * Y - 2 * X + 16
        assert s.den == Y**3 - 6 * Y**2 + 8 * Y - 6 * X * Y + 12 * X
        assert s.curve == quartic

    def test_constant_curve(self):
        with pytest.raises(ConstantCurveError):
            implicit_slope(Poly2.constant(3))


@pytest.mark.unit
class TestClassifyQuotient:
    """Test the 0/0 classifier."""

    def test_double_point_is_indeterminate(self, quartic, double_point):
        assert classify_quotient(implicit_slope(quartic), double_point) == Indeterminate00()

    def test_origin_is_vertical(self, quartic):
        assert classify_quotient(implicit_slope(quartic), ORIGIN) == InfiniteVertical()

    def test_finite(self, circle):
        verdict = classify_quotient(implicit_slope(circle), Point(3, 4))
        assert verdict == Finite(Fraction(-3, 4))
        assert verdict.kind == "finite"

    def test_exhaustive_grid(self, quartic):
        s = implicit_slope(quartic)
        grid = [Fraction(n, 2) for n in range(-8, 17)]
        indeterminate = []
        for x0 in grid:
            for y0 in grid:
                at = Point(x0, y0)
                num, den = s.num.at(at), s.den.at(at)
                verdict = classify_quotient(s, at)
                assert isinstance(verdict, Indeterminate00) == (num == 0 and den == 0)
                assert isinstance(verdict, InfiniteVertical) == (num != 0 and den == 0)
                if den:
                    assert verdict == Finite(num / den)
                if isinstance(verdict, Indeterminate00):
                    indeterminate.append(at)
        assert indeterminate == [Point(2, 2)]

    def test_witnesses(self):
        pairs = indeterminacy_witnesses([1, 2, Fraction(1, 8), -3])
        assert [b for b, _ in pairs] == [1, 2, Fraction(1, 8), -3]
        assert all(product == 0 for _, product in pairs)


@pytest.mark.unit
class TestLhopitalIterate:
    """Test the iteration at regular and multiple points."""

    def test_quartic_double_point(self, quartic, double_point):
        trace = lhopital_trace(implicit_slope(quartic), double_point)
        assert len(trace.steps) == 2
        assert trace.steps[0].vanishes
        assert not trace.steps[1].vanishes
        assert trace.steps[1].num_value == Poly2({(1, 0): -2})
        assert trace.steps[1].den_value == Poly2({(0, 1): -16})
        assert trace.relation == Poly2({(2, 0): 2, (0, 2): -16})
        assert trace.equation.poly_m == UPoly([-1, 0, 8])
        assert trace.equation.vertical_multiplicity == 0
        assert trace.equation.iterations_used == 1
        assert trace.equation.multiplicity == 2

    def test_regular_point(self, parabola):
        equation = lhopital_iterate(implicit_slope(parabola), Point(3, 9))
        assert equation.poly_m == UPoly([-6, 1])
        assert equation.iterations_used == 0

    def test_cusp(self, cusp):
        equation = lhopital_iterate(implicit_slope(cusp), ORIGIN)
        assert equation.poly_m == UPoly([0, 0, 1])
        directions = tangent_directions_leibniz(cusp, ORIGIN)
        assert len(directions) == 1
        assert directions[0].slope == 0
        assert directions[0].multiplicity == 2

    def test_vertical_tangent(self):
        curve = parse_curve("x = y^2").poly
        equation = lhopital_iterate(implicit_slope(curve), ORIGIN)
        assert equation.poly_m == UPoly([1])
        assert equation.vertical_multiplicity == 1
        directions = tangent_directions_leibniz(curve, ORIGIN)
        assert len(directions) == 1
        assert directions[0].is_vertical

    def test_node_with_vertical_branch(self):
        directions = tangent_directions_leibniz(X * Y, ORIGIN)
        assert [d.is_vertical for d in directions] == [False, True]
        assert directions[0].slope == 0

    def test_directions_ascending(self, quartic, double_point):
        directions = tangent_directions_leibniz(quartic, double_point)
        assert [d.slope.to_decimal(12) for d in directions] == ["-0.353553390593", "0.353553390593"]
        assert all(d.multiplicity == 1 for d in directions)

    def test_not_on_curve(self, quartic):
        with pytest.raises(NotOnCurveError) as exc_info:
            lhopital_iterate(implicit_slope(quartic), Point(1, 1))
        assert exc_info.value.value == -15

    def test_uncorrected_quartic_misses_the_point(self, double_point):
        printed = parse_curve("y^4 - 8y^3 - 16y^2 - 12xy^2 + 48xy + 4x^2 - 64x = 0").poly
        with pytest.raises(NotOnCurveError):
            lhopital_iterate(implicit_slope(printed), double_point)

    def test_triple_point_with_three_rational_branches(self):
        # lowest form (y + x)(y - x)(y - 2x) plus x^4
        curve = parse_curve("y^3 - 2xy^2 - x^2y + 2x^3 + x^4").poly
        equation = lhopital_iterate(implicit_slope(curve), ORIGIN)
        assert equation.poly_m == UPoly([2, -1, -2, 1])
        assert equation.vertical_multiplicity == 0
        assert equation.iterations_used == 2
        assert equation.multiplicity == 3
        directions = tangent_directions_leibniz(curve, ORIGIN)
        assert [d.slope for d in directions] == [-1, 1, 2]
        assert all(d.multiplicity == 1 for d in directions)

    @pytest.mark.parametrize("c", [-1, 5, Fraction(2, 7), Fraction(-9, 4)])
    def test_scaling_leaves_directions_unchanged(self, quartic, double_point, c):
        expected = tangent_directions_leibniz(quartic, double_point)
        scaled = tangent_directions_leibniz(quartic * c, double_point)
        assert len(scaled) == len(expected)
        assert all(a.same_as(b) for a, b in zip(scaled, expected, strict=True))

    @pytest.mark.slow
    def test_scaling_on_planted_corpus(self, planted_corpus):
        rng = random.Random(29)
        for sample in planted_corpus[:60]:
            c = Fraction(rng.choice([-5, -2, -1, 3, 7]), rng.randint(1, 6))
            expected = tangent_directions_leibniz(sample.curve, sample.at)
            scaled = tangent_directions_leibniz(sample.curve * c, sample.at)
            assert len(scaled) == len(expected)
            assert all(a.same_as(b) for a, b in zip(scaled, expected, strict=True))


@pytest.mark.unit
class TestSubtangent:
    """Test both subtangent conventions."""

    def test_parabola(self, parabola):
        rng = random.Random(21)
        for _ in range(10):
            x0 = Fraction(rng.randint(-40, 40), rng.randint(1, 9))
            if x0 == 0:
                x0 = Fraction(1, 3)
            at = Point(x0, x0 * x0)
            (direction,) = tangent_directions_leibniz(parabola, at)
            assert subtangent(at, direction.slope).value == x0 / 2

    def test_circle(self, circle):
        at = Point(3, 4)
        (direction,) = tangent_directions_leibniz(circle, at)
        assert direction.slope == Fraction(-3, 4)
        assert subtangent(at, direction.slope).value == Fraction(-16, 3)
        assert subtangent(at, direction.slope, SubtangentConvention.ALTERNATE).value == Fraction(-9, 4)

    def test_quartic_projection(self, quartic, double_point):
        values = [s.value for s in subtangents_for(tangent_directions_leibniz(quartic, double_point), double_point)]
        assert all(v.annihilator == UPoly([-32, 0, 1]) for v in values)
        assert [v.to_decimal(12) for v in values] == ["-5.656854249492", "5.656854249492"]

    def test_quartic_alternate(self, quartic, double_point):
        directions = tangent_directions_leibniz(quartic, double_point)
        values = [s.value for s in subtangents_for(directions, double_point, SubtangentConvention.ALTERNATE)]
        assert all(v.annihilator == UPoly([-1, 0, 2]) for v in values)
        assert [v.to_decimal(12) for v in values] == ["-0.707106781187", "0.707106781187"]

    def test_horizontal_tangent_off_axis(self):
        at = Point(0, 5)
        with pytest.raises(InfiniteSubtangentError):
            subtangent(at, 0)
        assert subtangent(at, 0, SubtangentConvention.ALTERNATE).value == 0

    def test_horizontal_tangent_on_axis(self):
        assert subtangent(ORIGIN, 0).value == 0

    def test_vertical_tangent(self):
        at = Point(5, 0)
        result = subtangent(at, None)
        assert result.vertical
        assert result.value == 0
        with pytest.raises(InfiniteSubtangentError):
            subtangent(at, None, SubtangentConvention.ALTERNATE)

    def test_accepts_isolated_roots(self):
        slope = IsolatedRoot.from_rational(Fraction(1, 2))
        assert subtangent(Point(1, 3), slope).value == 6


@pytest.mark.unit
class TestResolveZeroOverZero:
    """Test evaluation of 0/0 quotients by the differential iteration."""

    def test_equal_numerator_and_denominator(self):
        assert resolve_zero_over_zero(X, X, ORIGIN) == [IsolatedRoot.from_rational(1)]

    def test_ratio_of_lines(self):
        assert resolve_zero_over_zero(2 * X, 3 * X, ORIGIN) == [IsolatedRoot.from_rational(Fraction(2, 3))]

    def test_zero_and_infinite_limits(self):
        assert resolve_zero_over_zero(X**2, X, ORIGIN) == [IsolatedRoot.from_rational(0)]
        assert resolve_zero_over_zero(X, X**2, ORIGIN) == [None]

    def test_second_order(self):
        values = resolve_zero_over_zero(X**2 - 1, X**2 - 2 * X + 1, Point(1, 0))
        assert values == [None]

    def test_not_indeterminate(self):
        with pytest.raises(NotIndeterminateError):
            resolve_zero_over_zero(X + 1, X, ORIGIN)

    def test_direction_dependent(self):
        with pytest.raises(DegenerateAllDerivativesVanishError):
            resolve_zero_over_zero(Y, X, ORIGIN)

    def test_zero_over_zero_polynomials(self):
        with pytest.raises(DegenerateAllDerivativesVanishError):
            resolve_zero_over_zero(Poly2(), Poly2(), ORIGIN)

    def test_implicit_slope_at_the_double_point(self, quartic, double_point):
        s = implicit_slope(quartic)
        values = resolve_zero_over_zero(s.num, s.den, double_point)
        assert len(values) == 2
        assert values[0].to_float() == pytest.approx(-(2**0.5) / 4)
        assert values[1].to_float() == pytest.approx(2**0.5 / 4)
        assert values == [d.slope for d in tangent_directions_leibniz(quartic, double_point)]


@pytest.mark.unit
class TestTangentDirection:
    def test_same_as(self):
        a = TangentDirection(IsolatedRoot.from_rational(1), 1)
        assert a.same_as(TangentDirection(IsolatedRoot.from_rational(1), 1))
        assert not a.same_as(TangentDirection(IsolatedRoot.from_rational(1), 2))
        assert not a.same_as(TangentDirection(None, 1))
        assert TangentDirection(None, 2).same_as(TangentDirection(None, 2))

    def test_directions_from_equation(self):
        # (m - 1)^2 (m + 2)(m^2 - 2) with one vertical direction
        poly = UPoly([1, -1]) * UPoly([1, -1]) * UPoly([2, 1]) * UPoly([-2, 0, 1])
        directions = directions_from_equation(SlopeEquation(poly, 1, 0))

        assert [d.multiplicity for d in directions] == [1, 1, 2, 1, 1]
        assert directions[0].slope == -2
        assert directions[2].slope == 1
        assert directions[-1].is_vertical
        assert directions[1].slope.to_float() == pytest.approx(-2**0.5)
        assert directions[3].slope.to_float() == pytest.approx(2**0.5)

    def test_no_real_directions(self):
        assert directions_from_equation(SlopeEquation(UPoly([1, 0, 1]), 0, 2)) == []
