"""
Exact real-root isolation with Sturm sequences.

Algebraic numbers are held as an annihilating polynomial plus an isolating
rational interval. Rational roots are returned exactly (interval [r, r]).
"""

import functools
from dataclasses import dataclass
from fractions import Fraction

from ..errors import DivisionByZeroError, ZeroPolynomialError
from ..logging_config import get_logger
from .rational import sign
from .upoly import UPoly, squarefree_part, upoly_gcd

logger = get_logger(__name__)

DEFAULT_DISPLAY_WIDTH = Fraction(1, 10**12)


def sturm_chain(p: UPoly) -> list[UPoly]:
    """
    Standard Sturm sequence p, p', -rem(p, p'), ... ending in a constant for square-free p.

    Remainders are divided by their positive content, which leaves every sign unchanged.

    Raises:
        ZeroPolynomialError: if p is identically zero
    """
    if p.is_zero:
        raise ZeroPolynomialError("Sturm chain of the zero polynomial")
    chain = [p]
    if p.degree == 0:
        return chain
    chain.append(p.derivative())
    while True:
        remainder = chain[-2] % chain[-1]
        if remainder.is_zero:
            return chain
        chain.append((-remainder).positive_part())


def _variations(chain: list[UPoly], x: Fraction | None, *, minus_infinity: bool = False) -> int:
    signs = [s for s in (q.sign_at(x, at_minus_infinity=minus_infinity) for q in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:], strict=False) if a != b)


def sturm_count(chain: list[UPoly], lo: Fraction | None = None, hi: Fraction | None = None) -> int:
    """
    Number of distinct real roots in the half-open interval (lo, hi].

    None stands for -infinity (lo) or +infinity (hi).
    """
    v_lo = _variations(chain, lo, minus_infinity=True)
    v_hi = _variations(chain, hi)
    return v_lo - v_hi


def cauchy_bound(p: UPoly) -> Fraction:
    """Every root r satisfies |r| < bound."""
    lead = abs(p.leading)
    return 1 + max((abs(c) / lead for c in p.coeffs[:-1]), default=Fraction(0))


@dataclass(frozen=True, eq=False)
class IsolatedRoot:
    """
    A real algebraic number.

    Attributes:
        annihilator: Square-free primitive polynomial vanishing at the number
        lo: Lower end of the isolating interval
        hi: Upper end of the isolating interval
        exact_rational: The value itself when it is rational (then lo == hi)
    """

    annihilator: UPoly
    lo: Fraction
    hi: Fraction
    exact_rational: Fraction | None = None

    __hash__ = None  # type: ignore[assignment]

    @classmethod
    def from_rational(cls, value: Fraction | int) -> "IsolatedRoot":
        value = Fraction(value)
        return cls(UPoly([-value.numerator, value.denominator]), value, value, value)

    @property
    def interval(self) -> tuple[Fraction, Fraction]:
        return self.lo, self.hi

    @property
    def is_rational(self) -> bool:
        return self.exact_rational is not None

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def refine(self, width: Fraction | int | float) -> "IsolatedRoot":
        return refine(self, Fraction(width))

    def to_float(self) -> float:
        return float(self.refine(Fraction(1, 10**17)).midpoint)

    def to_decimal(self, digits: int = 12) -> str:
        """Decimal rendering after refining well below the last printed digit."""
        if self.exact_rational is not None:
            return f"{self.exact_rational:.{digits}f}"
        width = min(DEFAULT_DISPLAY_WIDTH, Fraction(1, 10 ** (digits + 2)))
        return f"{self.refine(width).midpoint:.{digits}f}"

    # ------------------------------------------------------------------
    # Exact comparison
    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int | Fraction):
            other = IsolatedRoot.from_rational(other)
        if not isinstance(other, IsolatedRoot):
            return NotImplemented
        if self.exact_rational is not None and other.exact_rational is not None:
            return self.exact_rational == other.exact_rational
        if self.exact_rational is not None:
            return other._contains_root_at(self.exact_rational)
        if other.exact_rational is not None:
            return self._contains_root_at(other.exact_rational)
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo > hi:
            return False
        common = upoly_gcd(self.annihilator, other.annihilator)
        if common.degree < 1:
            return False
        return common(lo) == 0 or sturm_count(sturm_chain(common), lo, hi) > 0

    def _contains_root_at(self, value: Fraction) -> bool:
        return self.lo <= value <= self.hi and self.annihilator(value) == 0

    def compare(self, other: "IsolatedRoot") -> int:
        """Exact three-way comparison, refining both intervals until they separate."""
        if self == other:
            return 0
        a, b = self, other
        while True:
            if a.hi < b.lo:
                return -1
            if b.hi < a.lo:
                return 1
            if a.exact_rational is None:
                a = refine(a, (a.hi - a.lo) / 2)
            if b.exact_rational is None:
                b = refine(b, (b.hi - b.lo) / 2)

    def __lt__(self, other: "IsolatedRoot") -> bool:
        return self.compare(other) < 0

    # ------------------------------------------------------------------
    # Algebraic transforms
    # ------------------------------------------------------------------

    def scaled(self, factor: Fraction | int) -> "IsolatedRoot":
        """The number factor * self."""
        factor = Fraction(factor)
        if self.exact_rational is not None or factor == 0:
            return IsolatedRoot.from_rational(factor * (self.exact_rational or 0))
        n = self.annihilator.degree
        coeffs = [c * factor ** (n - i) for i, c in enumerate(self.annihilator.coeffs)]
        ends = sorted((factor * self.lo, factor * self.hi))
        return IsolatedRoot(UPoly(coeffs).primitive(), ends[0], ends[1])

    def reciprocal_scaled(self, factor: Fraction | int) -> "IsolatedRoot":
        """
        The number factor / self.

        Raises:
            DivisionByZeroError: if self is zero
        """
        factor = Fraction(factor)
        if self.exact_rational is not None:
            if self.exact_rational == 0:
                raise DivisionByZeroError("reciprocal of zero")
            return IsolatedRoot.from_rational(factor / self.exact_rational)
        if factor == 0:
            return IsolatedRoot.from_rational(0)
        root = self
        while root.lo <= 0 <= root.hi:
            root = refine(root, (root.hi - root.lo) / 2)
            if root.exact_rational is not None:
                return root.reciprocal_scaled(factor)
        coeffs = [c * factor**i for i, c in enumerate(root.annihilator.coeffs)]
        ends = sorted((factor / root.lo, factor / root.hi))
        return IsolatedRoot(UPoly(reversed(coeffs)).primitive(), ends[0], ends[1])

    def __repr__(self) -> str:
        if self.exact_rational is not None:
            return f"IsolatedRoot({self.exact_rational})"
        return f"IsolatedRoot({self.annihilator!r}, [{self.lo}, {self.hi}])"


def _bisect_once(p: UPoly, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction, Fraction | None]:
    """Halve a sign-changing interval; the third element is set when the midpoint is the root."""
    mid = (lo + hi) / 2
    s_mid = sign(p(mid))
    if s_mid == 0:
        return mid, mid, mid
    if s_mid == sign(p(lo)):
        return mid, hi, None
    return lo, mid, None


def refine(root: IsolatedRoot, width: Fraction) -> IsolatedRoot:
    """
    Shrink the isolating interval by bisection until hi - lo <= width.

    The returned interval is nested in the input one; rational roots are returned unchanged.
    """
    if root.exact_rational is not None or root.hi - root.lo <= width:
        return root
    p = root.annihilator
    lo, hi = root.lo, root.hi
    while hi - lo > width:
        lo, hi, exact = _bisect_once(p, lo, hi)
        if exact is not None:
            return IsolatedRoot.from_rational(exact)
    return IsolatedRoot(p, lo, hi)


def _tighten(p: UPoly, chain: list[UPoly], lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction, Fraction | None]:
    """Shrink (lo, hi], holding exactly one root, until its ends carry opposite signs."""
    while True:
        if p(hi) == 0:
            return hi, hi, hi
        s_lo = sign(p(lo))
        if s_lo and s_lo != sign(p(hi)):
            return lo, hi, None
        mid = (lo + hi) / 2
        if sturm_count(chain, lo, mid) == 1:
            hi = mid
        else:
            lo = mid


def _rational_in(p: UPoly, lo: Fraction, hi: Fraction) -> Fraction | None:
    """
    The rational root inside the sign-changing interval, if the root is rational.

    By the rational root theorem a rational root of the integer polynomial p has a
    denominator dividing the leading coefficient L. Two such fractions are at least
    1/L^2 apart, so once the interval is narrower than 1/(2 L^2) the best
    approximation with denominator <= L is the only candidate.
    """
    ints = p.integer_coeffs()
    lead = abs(ints[-1])
    target = Fraction(1, 2 * lead * lead)
    while hi - lo >= target:
        lo, hi, exact = _bisect_once(p, lo, hi)
        if exact is not None:
            return exact
    candidate = ((lo + hi) / 2).limit_denominator(lead)
    if lo <= candidate <= hi and p(candidate) == 0:
        return candidate
    return None


def isolate_roots(p: UPoly) -> list[IsolatedRoot]:
    """
    One IsolatedRoot per distinct real root of a square-free polynomial, in increasing order.

    Rational roots come back exact with a linear annihilator; the irrational ones carry
    p with its rational linear factors divided out.

    Raises:
        ZeroPolynomialError: if p is identically zero
    """
    if p.is_zero:
        raise ZeroPolynomialError("root isolation of the zero polynomial")
    p = p.primitive()
    if p.degree < 1:
        return []
    chain = sturm_chain(p)
    bound = cauchy_bound(p)
    brackets: list[tuple[Fraction, Fraction]] = []
    pending = [(-bound, bound, sturm_count(chain, -bound, bound))]
    while pending:
        lo, hi, count = pending.pop()
        if count == 1:
            brackets.append((lo, hi))
        elif count > 1:
            mid = (lo + hi) / 2
            left = sturm_count(chain, lo, mid)
            pending.append((lo, mid, left))
            pending.append((mid, hi, count - left))
    brackets.sort()

    rationals: list[Fraction] = []
    irrational: list[tuple[Fraction, Fraction]] = []
    for lo, hi in brackets:
        lo, hi, exact = _tighten(p, chain, lo, hi)
        if exact is None:
            exact = _rational_in(p, lo, hi)
        if exact is None:
            irrational.append((lo, hi))
        else:
            rationals.append(exact)

    deflated = p
    for value in rationals:
        deflated = deflated // UPoly([-value.numerator, value.denominator])
    deflated = deflated.primitive()

    roots = [IsolatedRoot.from_rational(value) for value in rationals]
    roots.extend(IsolatedRoot(deflated, lo, hi) for lo, hi in irrational)
    roots.sort(key=functools.cmp_to_key(IsolatedRoot.compare))
    logger.debug(f"isolated {len(roots)} real roots ({len(rationals)} rational) of degree {p.degree}")
    return roots


def rational_roots(p: UPoly) -> list[Fraction]:
    """Distinct rational roots of any nonzero polynomial, increasing."""
    return [r.exact_rational for r in isolate_roots(squarefree_part(p)) if r.exact_rational is not None]
