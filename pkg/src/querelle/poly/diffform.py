"""
Formal differentials.

A DiffForm is a polynomial in the commuting symbols dx, dy whose coefficients
are Poly2. The operator d treats dx and dy as constants (d(dx) = d(dy) = 0),
the convention under which d(3y^2 - 12y - 2x + 16) = (6y - 12)dy - 2dx.
"""

from collections.abc import Mapping
from fractions import Fraction

from .poly2 import Monomial, Point, Poly2


class DiffForm:
    """Sparse map from differential exponents (a for dx, b for dy) to Poly2 coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Poly2] | None = None) -> None:
        self.terms: dict[Monomial, Poly2] = {m: c for m, c in (terms or {}).items() if not c.is_zero}

    @classmethod
    def from_poly(cls, p: Poly2) -> "DiffForm":
        """A differential form of degree 0."""
        return cls({(0, 0): p})

    @classmethod
    def dx(cls) -> "DiffForm":
        return cls({(1, 0): Poly2.constant(1)})

    @classmethod
    def dy(cls) -> "DiffForm":
        return cls({(0, 1): Poly2.constant(1)})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def differential_degrees(self) -> set[int]:
        return {a + b for a, b in self.terms}

    def is_homogeneous(self, k: int) -> bool:
        return all(a + b == k for a, b in self.terms)

    def coeff(self, a: int, b: int) -> Poly2:
        return self.terms.get((a, b), Poly2())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiffForm):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __neg__(self) -> "DiffForm":
        return DiffForm({m: -c for m, c in self.terms.items()})

    def __add__(self, other: "DiffForm") -> "DiffForm":
        acc = dict(self.terms)
        for monomial, coeff in other.terms.items():
            acc[monomial] = acc.get(monomial, Poly2()) + coeff
        return DiffForm(acc)

    def __sub__(self, other: "DiffForm") -> "DiffForm":
        return self + (-other)

    def __mul__(self, other: "DiffForm | Poly2 | Fraction | int") -> "DiffForm":
        if not isinstance(other, DiffForm):
            return DiffForm({m: c * other for m, c in self.terms.items()})
        acc: dict[Monomial, Poly2] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                key = (a1 + a2, b1 + b2)
                acc[key] = acc.get(key, Poly2()) + c1 * c2
        return DiffForm(acc)

    __rmul__ = __mul__

    def differential(self) -> "DiffForm":
        """d(P dx^a dy^b) = (P_x dx + P_y dy) dx^a dy^b, raising the differential degree by one."""
        acc: dict[Monomial, Poly2] = {}
        for (a, b), coeff in self.terms.items():
            for key, part in (((a + 1, b), coeff.diff("x")), ((a, b + 1), coeff.diff("y"))):
                if not part.is_zero:
                    acc[key] = acc.get(key, Poly2()) + part
        return DiffForm(acc)

    def evaluate(self, at: Point) -> Poly2:
        """Evaluate every coefficient at the point, leaving a polynomial in (dx, dy)."""
        return Poly2({m: c.at(at) for m, c in self.terms.items()})

    def __repr__(self) -> str:
        from ..parse.render import render_diffform

        return f"DiffForm({render_diffform(self)!r})"


def total_differential(f: DiffForm) -> DiffForm:
    return f.differential()


def eval_diffform(f: DiffForm, at: Point) -> Poly2:
    return f.evaluate(at)
