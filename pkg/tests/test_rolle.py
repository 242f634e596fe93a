"""
Tests for the slice method.
"""

import math
import random
from fractions import Fraction

import pytest

from querelle.errors import DegenerateAllSlicesVanishError, NotOnCurveError
from querelle.exact import UPoly
from querelle.leibniz import SubtangentConvention
from querelle.poly import Point, Poly2
from querelle.rolle import (
    arranged_equality,
    rolle_directions,
    rolle_subtangents,
    slice_at,
    slice_sequence,
    tangent_directions_rolle,
)

X, Y = Poly2.x(), Poly2.y()


@pytest.mark.unit
class TestSlices:
    """Test the slice rewriting rule."""

    def test_first_slice_of_y4(self):
        # y^4 becomes 4 y^3 z
        assert slice_at(Y**4, Point(1, 3), 1) == Poly2({(0, 1): 108})

    def test_first_slice_mixes_v_and_z(self):
        # 12 x y^2 becomes 24 x y z + 12 y^2 v
        assert slice_at(12 * X * Y**2, Point(1, 1), 1) == Poly2({(0, 1): 24, (1, 0): 12})

    def test_quartic_slices(self, quartic, double_point):
        assert slice_at(quartic, double_point, 1).is_zero
        assert slice_at(quartic, double_point, 2) == Poly2({(2, 0): 8, (0, 2): -64})

    def test_beyond_degree(self, quartic, double_point):
        assert slice_at(quartic, double_point, 5).is_zero

    def test_numbering_starts_at_one(self, quartic, double_point):
        with pytest.raises(ValueError):
            slice_at(quartic, double_point, 0)

    def test_sequence(self, quartic, double_point):
        sequence = slice_sequence(quartic, double_point)
        assert sequence.first_nonzero == 2
        assert sorted(sequence.slices) == [1, 2, 3, 4]
        assert sequence.slices[4] == 24 * Y**4

    def test_matches_taylor_components(self):
        rng = random.Random(500)
        monomials = [(i, j) for i in range(5) for j in range(5 - i)]
        for _ in range(500):
            curve = Poly2.from_terms(
                (rng.choice(monomials), Fraction(rng.randint(-9, 9), rng.randint(1, 4))) for _ in range(5)
            )
            at = Point(Fraction(rng.randint(-4, 4), rng.randint(1, 3)), Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
            k = rng.randint(1, 5)
            expected = curve.taylor_shift(at).homog_component(k) * math.factorial(k)
            assert slice_at(curve, at, k) == expected
            arranged = arranged_equality(curve, at)
            if k < len(arranged):
                assert slice_at(curve, at, k) == arranged[k] * math.factorial(k)

    def test_arranged_equality_constant_term(self, quartic):
        assert arranged_equality(quartic, Point(1, 1))[0] == Poly2.constant(-15)


@pytest.mark.unit
class TestRolleDirections:
    """Test directions and subtangents read from the first non-vanishing slice."""

    def test_quartic(self, quartic, double_point):
        equation = rolle_directions(quartic, double_point)
        assert equation.poly_m == UPoly([-1, 0, 8])
        assert equation.iterations_used == 2
        assert [d.slope.to_decimal(12) for d in tangent_directions_rolle(quartic, double_point)] == [
            "-0.353553390593",
            "0.353553390593",
        ]

    def test_triple_point_with_three_rational_branches(self):
        curve = Y**3 - 2 * X * Y**2 - X**2 * Y + 2 * X**3 + X**4
        equation = rolle_directions(curve, Point(0, 0))
        assert equation.poly_m == UPoly([2, -1, -2, 1])
        assert equation.iterations_used == 3
        assert equation.multiplicity == 3
        directions = tangent_directions_rolle(curve, Point(0, 0))
        assert [d.slope for d in directions] == [-1, 1, 2]

    def test_subtangents(self, quartic, double_point):
        projection = rolle_subtangents(quartic, double_point)
        assert [s.value.to_decimal(12) for s in projection] == ["-5.656854249492", "5.656854249492"]
        alternate = rolle_subtangents(quartic, double_point, SubtangentConvention.ALTERNATE)
        assert [s.value.to_decimal(6) for s in alternate] == ["-0.707107", "0.707107"]

    def test_regular_point(self, circle):
        (direction,) = tangent_directions_rolle(circle, Point(3, 4))
        assert direction.slope == Fraction(-3, 4)
        assert rolle_directions(circle, Point(3, 4)).iterations_used == 1

    def test_vertical(self, circle):
        equation = rolle_directions(circle, Point(5, 0))
        assert equation.vertical_multiplicity == 1
        assert equation.poly_m == UPoly([1])

    def test_not_on_curve(self, quartic):
        with pytest.raises(NotOnCurveError):
            rolle_directions(quartic, Point(1, 1))

    def test_zero_polynomial(self):
        with pytest.raises(DegenerateAllSlicesVanishError):
            rolle_directions(Poly2(), Point(0, 0))
