"""
Tests for curve tracing and SVG rendering.
"""

import math
from fractions import Fraction

import pytest

from querelle.cone import tangent_cone_at
from querelle.exact import IsolatedRoot
from querelle.leibniz import TangentDirection
from querelle.models import PlotSpec
from querelle.parse import parse_curve
from querelle.poly import Point, Poly2
from querelle.visualization import chord_slope, evaluate, local_slope, render_svg, trace_curve


@pytest.mark.unit
class TestTraceCurve:
    def test_circle_points_lie_near_the_circle(self):
        circle = parse_curve("x^2 + y^2 = 25").poly
        segments = trace_curve(circle, (-6, 6, -6, 6), 64)
        assert len(segments) > 100
        for segment in segments:
            for x, y in segment:
                assert abs(math.hypot(x, y) - 5) < 0.01

    def test_nothing_in_empty_box(self):
        circle = parse_curve("x^2 + y^2 = 25").poly
        assert trace_curve(circle, (10, 20, 10, 20), 32) == []

    def test_saddle_cell_gets_two_segments(self):
        xy = Poly2({(1, 1): 1})
        segments = trace_curve(xy, (-1, 1, -1, 1), 1)
        assert sorted(segments) == [((-1.0, 0.0), (0.0, -1.0)), ((1.0, 0.0), (0.0, 1.0))]

    def test_evaluate_matches_exact(self, quartic):
        value = evaluate(quartic, 1.0, 1.0)
        assert float(value) == -15.0


@pytest.mark.unit
class TestChordSlope:
    def test_no_points(self):
        assert chord_slope([]) is None

    def test_vertical(self):
        assert chord_slope([((0.0, 0.0), (0.0, 1.0))]) == math.inf

    def test_longest_chord_wins(self):
        segments = [((0.0, 0.0), (1.0, 1.0)), ((1.0, 1.0), (4.0, 2.0))]
        assert chord_slope(segments) == pytest.approx(0.5)

    def test_parabola(self):
        parabola = parse_curve("y = x^2").poly
        assert local_slope(parabola, Point(Fraction(3, 2), Fraction(9, 4))) == pytest.approx(3.0, abs=1e-3)

    @pytest.mark.slow
    def test_regular_corpus(self, regular_corpus):
        for sample in regular_corpus:
            estimate = local_slope(sample.curve, sample.at)
            assert estimate is not None
            assert abs(estimate - float(sample.slope)) < 1e-3


@pytest.mark.unit
class TestRenderSvg:
    """SVG output."""

    @pytest.fixture
    def spec(self) -> PlotSpec:
        return PlotSpec(grid=128)

    def test_quartic_with_tangents(self, quartic, double_point, spec):
        directions = tangent_cone_at(quartic, double_point).directions
        svg = render_svg(quartic, spec, double_point, directions)
        assert svg.startswith('<?xml version="1.0" encoding="UTF-8"?>\n<svg ')
        assert svg.endswith("</svg>\n")
        assert '<path id="curve"' in svg
        assert svg.count('class="tangent"') == 2
        assert "tangent m = -0.353553" in svg
        assert "tangent m = 0.353553" in svg
        assert '<circle cx="' in svg

    def test_byte_identical(self, quartic, double_point, spec):
        directions = tangent_cone_at(quartic, double_point).directions
        assert render_svg(quartic, spec, double_point, directions) == render_svg(
            quartic, spec, double_point, directions
        )

    def test_no_point_no_tangents(self, quartic, spec):
        svg = render_svg(quartic, spec)
        assert 'class="tangent"' not in svg
        assert "<circle" not in svg
        assert '<g id="legend"' in svg

    def test_empty_box_draws_axes_only(self):
        circle = parse_curve("x^2 + y^2 = 25").poly
        spec = PlotSpec(bbox=(Fraction(10), Fraction(20), Fraction(10), Fraction(20)), grid=32)
        svg = render_svg(circle, spec)
        assert '<g id="axes"' in svg
        assert 'id="curve"' not in svg

    def test_vertical_tangent(self):
        circle = parse_curve("x^2 + y^2 = 25").poly
        spec = PlotSpec(bbox=(Fraction(-6), Fraction(6), Fraction(-6), Fraction(6)), grid=64)
        svg = render_svg(circle, spec, Point(5, 0), [TangentDirection(None, 1)])
        assert svg.count('class="tangent"') == 1
        assert "vertical tangent" in svg

    def test_tangent_outside_box_is_only_listed(self, spec):
        parabola = parse_curve("y = x^2").poly
        direction = TangentDirection(IsolatedRoot.from_rational(0), 1)
        svg = render_svg(parabola, spec, Point(0, 20), [direction])
        assert 'class="tangent"' not in svg
        assert "tangent m = 0.000000" in svg
