"""Pytest configuration and shared fixtures."""

import random
from dataclasses import dataclass
from fractions import Fraction

import pytest

from querelle.analysis import DOUBLE_POINT, QUARTIC
from querelle.exact import upoly_gcd
from querelle.parse import CurveSpec, parse_curve
from querelle.poly import Point, Poly2


@dataclass(frozen=True)
class PlantedCurve:
    """A curve built to have a k-fold point at `at` and no other singular point."""

    curve: Poly2
    at: Point
    k: int
    cone: Poly2  # lowest form in (u, w), before shifting


@dataclass(frozen=True)
class RegularSample:
    curve: Poly2
    at: Point
    slope: Fraction


def _form(coeffs: list[int]) -> Poly2:
    """Homogeneous form sum c_i u^i w^(n-i) in the shifted variables, stored as (x, y) = (u, w)."""
    n = len(coeffs) - 1
    return Poly2({(i, n - i): c for i, c in enumerate(coeffs)})


def _coprime(a: Poly2, b: Poly2) -> bool:
    ga, gb = a.dehomogenize(), b.dehomogenize()
    if upoly_gcd(ga, gb).degree >= 1:
        return False
    # both vanish on the vertical direction
    return not (a.total_degree > ga.degree and b.total_degree > gb.degree)


def _planted(rng: random.Random) -> PlantedCurve:
    k = rng.choice([2, 3, 4])
    x0 = Fraction(rng.randint(-6, 6), rng.choice([1, 1, 2, 3]))
    at = Point(x0, Fraction(rng.randint(-6, 6), rng.choice([1, 2])))
    while True:
        cone = Poly2.constant(1)
        for _ in range(k):
            a, b = 0, 0
            while a == 0 and b == 0:
                a, b = rng.randint(-3, 3), rng.randint(-3, 3)
            cone *= Poly2({(1, 0): a, (0, 1): b})
        higher = _form([rng.randint(-3, 3) for _ in range(k + 2)])
        if not higher.is_zero and _coprime(cone, higher):
            break
    return PlantedCurve(curve=(cone + higher).taylor_shift(-at), at=at, k=k, cone=cone)


@pytest.fixture(scope="session")
def planted_corpus() -> list[PlantedCurve]:
    """200 curves with a planted k-fold point: k lines through it plus a coprime form of degree k + 1."""
    rng = random.Random(1696)
    return [_planted(rng) for _ in range(200)]


@pytest.fixture(scope="session")
def regular_corpus() -> list[RegularSample]:
    """50 points where the curve is smooth with a moderate, non-vertical slope."""
    rng = random.Random(163)
    monomials = [(i, j) for i in range(4) for j in range(4 - i) if i + j]
    samples: list[RegularSample] = []
    while len(samples) < 50:
        g = Poly2({m: rng.randint(-4, 4) for m in monomials})
        at = Point(Fraction(rng.randint(-8, 8), 4), Fraction(rng.randint(-8, 8), 4))
        curve = g - g.at(at)
        fx, fy = curve.diff("x").at(at), curve.diff("y").at(at)
        if abs(fy) < 1:
            continue
        slope = -fx / fy
        if abs(slope) <= 5:
            samples.append(RegularSample(curve=curve, at=at, slope=slope))
    return samples


@pytest.fixture
def quartic() -> Poly2:
    return parse_curve(QUARTIC).poly


@pytest.fixture
def quartic_spec() -> CurveSpec:
    return parse_curve(QUARTIC)


@pytest.fixture
def double_point() -> Point:
    return DOUBLE_POINT


@pytest.fixture
def parabola() -> Poly2:
    """y = x^2."""
    return parse_curve("y = x^2").poly


@pytest.fixture
def circle() -> Poly2:
    return parse_curve("x^2 + y^2 = 25").poly


@pytest.fixture
def cusp() -> Poly2:
    """y^2 = x^3, cusp at the origin with the single tangent y = 0 counted twice."""
    return parse_curve("y^2 = x^3").poly
