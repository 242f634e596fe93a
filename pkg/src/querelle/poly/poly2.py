"""
Sparse bivariate polynomials over the rationals.

A Poly2 maps exponent pairs (i, j) to the coefficient of x^i y^j. The same type
holds the homogeneous forms in shifted variables (u, w), slice variables (v, z)
and differentials (dx, dy): the first exponent always belongs to the first
variable.
"""

import math
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from ..exact import UPoly, rational_content

type Monomial = tuple[int, int]
type Variable = Literal["x", "y"]


@dataclass(frozen=True)
class Point:
    """A rational point of the plane."""

    x0: Fraction
    y0: Fraction

    def __init__(self, x0: Fraction | int | str, y0: Fraction | int | str) -> None:
        object.__setattr__(self, "x0", Fraction(x0))
        object.__setattr__(self, "y0", Fraction(y0))

    def __neg__(self) -> "Point":
        return Point(-self.x0, -self.y0)

    def __iter__(self) -> Iterator[Fraction]:
        yield self.x0
        yield self.y0

    def __str__(self) -> str:
        return f"({self.x0}, {self.y0})"


class Poly2:
    """Immutable sparse polynomial in two variables."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction | int] | None = None) -> None:
        clean: dict[Monomial, Fraction] = {}
        for monomial, coeff in (terms or {}).items():
            value = Fraction(coeff)
            if value:
                clean[monomial] = value
        self.terms: dict[Monomial, Fraction] = clean

    @classmethod
    def constant(cls, value: Fraction | int) -> "Poly2":
        return cls({(0, 0): value})

    @classmethod
    def x(cls) -> "Poly2":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "Poly2":
        return cls({(0, 1): 1})

    @classmethod
    def from_terms(cls, items: Iterable[tuple[Monomial, Fraction | int]]) -> "Poly2":
        """Build from (monomial, coefficient) pairs, summing repeated monomials."""
        acc: dict[Monomial, Fraction] = {}
        for monomial, coeff in items:
            acc[monomial] = acc.get(monomial, Fraction(0)) + Fraction(coeff)
        return cls(acc)

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(monomial == (0, 0) for monomial in self.terms)

    @property
    def total_degree(self) -> int:
        """Maximum i + j over stored terms, -1 for the zero polynomial."""
        return max((i + j for i, j in self.terms), default=-1)

    def degree_in(self, var: Variable) -> int:
        index = 0 if var == "x" else 1
        return max((monomial[index] for monomial in self.terms), default=-1)

    def coeff(self, i: int, j: int) -> Fraction:
        return self.terms.get((i, j), Fraction(0))

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in canonical graded-lex order: total degree descending, then x-exponent ascending."""
        return sorted(self.terms.items(), key=lambda item: (-(item[0][0] + item[0][1]), item[0][0]))

    def content(self) -> Fraction:
        return rational_content(self.terms.values())

    def is_homogeneous(self, k: int) -> bool:
        return all(i + j == k for i, j in self.terms)

    # ------------------------------------------------------------------
    # Ring operations
    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly2):
            return self.terms == other.terms
        if isinstance(other, int | Fraction):
            return self.terms == Poly2.constant(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __neg__(self) -> "Poly2":
        return Poly2({m: -c for m, c in self.terms.items()})

    def __add__(self, other: "Poly2 | Fraction | int") -> "Poly2":
        other = _lift(other)
        acc = dict(self.terms)
        for monomial, coeff in other.terms.items():
            acc[monomial] = acc.get(monomial, Fraction(0)) + coeff
        return Poly2(acc)

    __radd__ = __add__

    def __sub__(self, other: "Poly2 | Fraction | int") -> "Poly2":
        return self + (-_lift(other))

    def __rsub__(self, other: "Poly2 | Fraction | int") -> "Poly2":
        return _lift(other) - self

    def __mul__(self, other: "Poly2 | Fraction | int") -> "Poly2":
        if isinstance(other, int | Fraction):
            return self.scale(other)
        if not isinstance(other, Poly2):
            return NotImplemented
        acc: dict[Monomial, Fraction] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                acc[key] = acc.get(key, Fraction(0)) + c1 * c2
        return Poly2(acc)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly2":
        if exponent < 0:
            raise ValueError("negative exponent")
        result = Poly2.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result *= base
            base *= base
            exponent >>= 1
        return result

    def scale(self, factor: Fraction | int) -> "Poly2":
        factor = Fraction(factor)
        return Poly2({m: c * factor for m, c in self.terms.items()})

    # ------------------------------------------------------------------
    # Calculus and evaluation
    # ------------------------------------------------------------------

    def diff(self, var: Variable) -> "Poly2":
        """Exact partial derivative."""
        acc: dict[Monomial, Fraction] = {}
        for (i, j), coeff in self.terms.items():
            if var == "x" and i:
                acc[(i - 1, j)] = coeff * i
            elif var == "y" and j:
                acc[(i, j - 1)] = coeff * j
        return Poly2(acc)

    def evaluate(self, x: Fraction | int, y: Fraction | int) -> Fraction:
        x, y = Fraction(x), Fraction(y)
        return sum((c * x**i * y**j for (i, j), c in self.terms.items()), Fraction(0))

    def at(self, point: Point) -> Fraction:
        return self.evaluate(point.x0, point.y0)

    def specialize_x(self, x0: Fraction | int) -> UPoly:
        """The univariate polynomial y -> p(x0, y)."""
        coeffs: dict[int, Fraction] = {}
        for (i, j), c in self.terms.items():
            coeffs[j] = coeffs.get(j, Fraction(0)) + c * Fraction(x0) ** i
        return UPoly(coeffs.get(j, 0) for j in range(max(coeffs, default=-1) + 1))

    def specialize_y(self, y0: Fraction | int) -> UPoly:
        """The univariate polynomial x -> p(x, y0)."""
        return self.swap().specialize_x(y0)

    def coefficients_in_y(self) -> list[UPoly]:
        """Coefficients of y^0, y^1, ... as polynomials in x."""
        rows: list[dict[int, Fraction]] = [{} for _ in range(self.degree_in("y") + 1)]
        for (i, j), c in self.terms.items():
            rows[j][i] = c
        return [UPoly(row.get(i, 0) for i in range(max(row, default=-1) + 1)) for row in rows]

    def swap(self) -> "Poly2":
        """Exchange the two variables."""
        return Poly2({(j, i): c for (i, j), c in self.terms.items()})

    def homog_component(self, k: int) -> "Poly2":
        """Sum of the terms of total degree exactly k."""
        return Poly2({m: c for m, c in self.terms.items() if m[0] + m[1] == k})

    def dehomogenize(self) -> UPoly:
        """
        Set the first variable to 1, giving a polynomial in the ratio second/first.

        For a form in (u, w) this is the polynomial in the slope m = w/u.
        """
        coeffs: dict[int, Fraction] = {}
        for (_, j), c in self.terms.items():
            coeffs[j] = coeffs.get(j, Fraction(0)) + c
        return UPoly(coeffs.get(j, 0) for j in range(max(coeffs, default=-1) + 1))

    def taylor_shift(self, at: Point) -> "Poly2":
        """The polynomial q with q(u, w) = p(x0 + u, y0 + w)."""
        acc: dict[Monomial, Fraction] = {}
        for (i, j), c in self.terms.items():
            for a in range(i + 1):
                cx = c * math.comb(i, a) * at.x0 ** (i - a)
                if not cx:
                    continue
                for b in range(j + 1):
                    cy = cx * math.comb(j, b) * at.y0 ** (j - b)
                    if cy:
                        acc[(a, b)] = acc.get((a, b), Fraction(0)) + cy
        return Poly2(acc)

    def __repr__(self) -> str:
        from ..parse.render import render

        return f"Poly2({render(self)!r})"


def _lift(value: "Poly2 | Fraction | int") -> Poly2:
    return value if isinstance(value, Poly2) else Poly2.constant(value)


def p2_arith(a: Poly2, b: Poly2, op: str) -> Poly2:
    """Sum, difference or product of two polynomials."""
    if op == "+":
        return a + b
    if op in {"-", "−"}:
        return a - b
    if op in {"*", "×"}:
        return a * b
    raise ValueError(f"unknown operator {op!r}")


def p2_diff(p: Poly2, var: Variable) -> Poly2:
    return p.diff(var)


def taylor_shift(p: Poly2, at: Point) -> Poly2:
    return p.taylor_shift(at)


def homog_component(p: Poly2, k: int) -> Poly2:
    return p.homog_component(k)
