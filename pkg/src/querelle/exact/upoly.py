"""
Univariate polynomials over the rationals.

Coefficients are stored low degree first with no trailing zeros, so the zero
polynomial is the empty tuple.
"""

from collections.abc import Iterable
from fractions import Fraction

from ..errors import DivisionByZeroError, ZeroPolynomialError
from .rational import common_denominator, rational_content, sign


class UPoly:
    """Dense univariate polynomial with Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int] = ()) -> None:
        terms = [Fraction(c) for c in coeffs]
        while terms and terms[-1] == 0:
            terms.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(terms)

    @classmethod
    def constant(cls, value: Fraction | int) -> "UPoly":
        return cls([value])

    @classmethod
    def monomial(cls, degree: int, coeff: Fraction | int = 1) -> "UPoly":
        return cls([0] * degree + [coeff])

    @classmethod
    def from_roots(cls, roots: Iterable[Fraction | int]) -> "UPoly":
        """Monic polynomial with the given roots (with repetition)."""
        result = cls([1])
        for root in roots:
            result *= cls([-Fraction(root), 1])
        return result

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __call__(self, x: Fraction | int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: Fraction | int | None, *, at_minus_infinity: bool = False) -> int:
        """Sign of the value at x; x=None means +infinity (or -infinity when flagged)."""
        if x is not None:
            return sign(self(x))
        if self.is_zero:
            return 0
        lead = sign(self.leading)
        if at_minus_infinity and self.degree % 2:
            return -lead
        return lead

    # ------------------------------------------------------------------
    # Ring operations
    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int | Fraction):
            return self.coeffs == UPoly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "UPoly":
        return UPoly(-c for c in self.coeffs)

    def __add__(self, other: "UPoly | Fraction | int") -> "UPoly":
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UPoly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __sub__(self, other: "UPoly | Fraction | int") -> "UPoly":
        return self + (-_lift(other))

    def __rsub__(self, other: "UPoly | Fraction | int") -> "UPoly":
        return _lift(other) - self

    def __mul__(self, other: "UPoly | Fraction | int") -> "UPoly":
        if not isinstance(other, UPoly):
            factor = Fraction(other)
            return UPoly(c * factor for c in self.coeffs)
        if self.is_zero or other.is_zero:
            return UPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "UPoly":
        result = UPoly([1])
        for _ in range(exponent):
            result *= self
        return result

    def __divmod__(self, other: "UPoly") -> tuple["UPoly", "UPoly"]:
        if other.is_zero:
            raise DivisionByZeroError("polynomial division by zero")
        remainder = list(self.coeffs)
        quotient = [Fraction(0)] * max(len(remainder) - other.degree, 1)
        lead = other.leading
        for shift in range(len(remainder) - len(other.coeffs), -1, -1):
            factor = remainder[shift + other.degree] / lead
            if factor:
                quotient[shift] = factor
                for i, c in enumerate(other.coeffs):
                    remainder[shift + i] -= factor * c
        return UPoly(quotient), UPoly(remainder)

    def __floordiv__(self, other: "UPoly") -> "UPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "UPoly") -> "UPoly":
        return divmod(self, other)[1]

    # ------------------------------------------------------------------
    # Normalization and calculus
    # ------------------------------------------------------------------

    def content(self) -> Fraction:
        """Positive rational content."""
        return rational_content(self.coeffs)

    def primitive(self) -> "UPoly":
        """Integer coefficients with gcd 1 and positive leading coefficient."""
        if self.is_zero:
            return self
        scale = 1 / self.content()
        if self.leading < 0:
            scale = -scale
        return self * scale

    def positive_part(self) -> "UPoly":
        """Divide by the positive content, keeping every sign."""
        if self.is_zero:
            return self
        return self * (1 / self.content())

    def integer_coeffs(self) -> list[int]:
        """Coefficients scaled by the common denominator, low degree first."""
        den = common_denominator(self.coeffs)
        return [int(c * den) for c in self.coeffs]

    def derivative(self) -> "UPoly":
        return UPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def scale_variable(self, factor: Fraction | int) -> "UPoly":
        """The polynomial t -> p(factor * t)."""
        factor = Fraction(factor)
        return UPoly(c * factor**i for i, c in enumerate(self.coeffs))

    def reversed(self) -> "UPoly":
        """t^n p(1/t) where n is the degree."""
        return UPoly(reversed(self.coeffs))

    def trailing_zero_order(self) -> int:
        """Multiplicity of 0 as a root."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return 0

    def __repr__(self) -> str:
        return f"UPoly({[str(c) for c in self.coeffs]})"


def _lift(value: "UPoly | Fraction | int") -> UPoly:
    return value if isinstance(value, UPoly) else UPoly([value])


def upoly_gcd(a: UPoly, b: UPoly) -> UPoly:
    """Greatest common divisor, normalized primitive with positive leading coefficient."""
    while not b.is_zero:
        a, b = b, (a % b).positive_part()
    return a.primitive()


def squarefree_part(p: UPoly) -> UPoly:
    """
    p / gcd(p, p'), primitive with positive leading coefficient.

    Raises:
        ZeroPolynomialError: if p is identically zero
    """
    if p.is_zero:
        raise ZeroPolynomialError("square-free part of the zero polynomial")
    return (p // upoly_gcd(p, p.derivative())).primitive()


def squarefree_decomposition(p: UPoly) -> list[tuple[UPoly, int]]:
    """
    Split p into pairwise coprime square-free factors with multiplicities.

    Constant factors are dropped; each returned factor is primitive with a
    positive leading coefficient and p equals the product of factor**mult up
    to a rational constant.

    Raises:
        ZeroPolynomialError: if p is identically zero
    """
    if p.is_zero:
        raise ZeroPolynomialError("square-free decomposition of the zero polynomial")
    result: list[tuple[UPoly, int]] = []
    c = upoly_gcd(p, p.derivative())
    w = (p // c).primitive()
    multiplicity = 1
    while w.degree > 0:
        y = upoly_gcd(w, c)
        z = (w // y).primitive()
        if z.degree > 0:
            result.append((z, multiplicity))
        multiplicity += 1
        w = y
        c = c // y
    return result
