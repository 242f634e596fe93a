"""
Recursive-descent parser for curve equations in x and y.

Grammar (whitespace insignificant):

    equation   := expression ('=' expression)?
    expression := term (('+' | '-') term)*
    term       := ('+' | '-')* product
    product    := power (('*')? power)*
    power      := atom ('^' integer)?
    atom       := integer ('/' integer)? | 'x' | 'y' | '(' expression ')'

Adjacent factors multiply, so the historical notation 12xy^2 is accepted.
Unary minus binds looser than '^' and multiplication: -x^2 is -(x^2).
A power may not exceed total degree MAX_DEGREE.
"""

from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction

from ..errors import ParseError
from ..logging_config import get_logger
from ..poly import Poly2

logger = get_logger(__name__)

_SUPERSCRIPTS = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹", "0123456789")
_MINUS = {"-", "−"}
_TIMES = {"*", "·", "×"}
MAX_DEGREE = 256


@dataclass(frozen=True)
class Token:
    kind: str  # number, var, op, sup, end
    text: str
    pos: int


@dataclass(frozen=True)
class CurveSpec:
    """A curve equation moved to the form poly = 0."""

    poly: Poly2
    source: str


def scan(text: str) -> Iterator[Token]:
    """
    Tokens of `text`, produced on demand and ending with an `end` token.

    An invalid character raises ParseError only when the scan reaches it, so a
    syntax error earlier in the text is reported first.
    """
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isascii() and ch.isdigit():
            start = i
            while i < len(text) and text[i].isascii() and text[i].isdigit():
                i += 1
            yield Token("number", text[start:i], start)
        elif ch in "⁰¹²³⁴⁵⁶⁷⁸⁹":
            start = i
            while i < len(text) and text[i] in "⁰¹²³⁴⁵⁶⁷⁸⁹":
                i += 1
            yield Token("sup", text[start:i].translate(_SUPERSCRIPTS), start)
        elif ch in "xy":
            yield Token("var", ch, i)
            i += 1
        elif ch in "+-−*·×^/()=":
            yield Token("op", "-" if ch in _MINUS else ("*" if ch in _TIMES else ch), i)
            i += 1
        else:
            raise ParseError(i, "x, y, a number, an operator or a parenthesis", repr(ch))
    yield Token("end", "", len(text))


def tokenize(text: str) -> list[Token]:
    return list(scan(text))


def _describe(token: Token) -> str:
    return "end of input" if token.kind == "end" else repr(token.text)


class _Parser:
    def __init__(self, text: str) -> None:
        self.tokens = scan(text)
        self._current: Token | None = None

    @property
    def current(self) -> Token:
        if self._current is None:
            self._current = next(self.tokens)
        return self._current

    def advance(self) -> Token:
        token = self.current
        self._current = None
        return token

    def raise_to(self, base: Poly2) -> Poly2:
        """base to the exponent token at the cursor; the power may not exceed MAX_DEGREE."""
        token = self.advance()
        value = int(token.text)
        if value > MAX_DEGREE or base.total_degree * value > MAX_DEGREE:
            raise ParseError(token.pos, f"a power of degree at most {MAX_DEGREE}", repr(token.text))
        return base**value

    def at_op(self, *ops: str) -> bool:
        return self.current.kind == "op" and self.current.text in ops

    def expect_op(self, op: str) -> Token:
        if not self.at_op(op):
            raise ParseError(self.current.pos, repr(op), _describe(self.current))
        return self.advance()

    def fail(self, expected: str) -> ParseError:
        return ParseError(self.current.pos, expected, _describe(self.current))

    def equation(self) -> Poly2:
        if self.current.kind == "end":
            raise self.fail("an expression")
        lhs = self.expression()
        if self.at_op("="):
            self.advance()
            lhs = lhs - self.expression()
        if self.current.kind != "end":
            raise self.fail("an operator or end of input")
        return lhs

    def expression(self) -> Poly2:
        result = self.term()
        while self.at_op("+", "-"):
            op = self.advance().text
            value = self.term()
            result = result + value if op == "+" else result - value
        return result

    def term(self) -> Poly2:
        negate = False
        while self.at_op("+", "-"):
            if self.advance().text == "-":
                negate = not negate
        value = self.product()
        return -value if negate else value

    def starts_atom(self) -> bool:
        token = self.current
        return token.kind in {"number", "var"} or (token.kind == "op" and token.text == "(")

    def product(self) -> Poly2:
        result = self.power()
        while True:
            if self.at_op("*"):
                self.advance()
                result *= self.power()
            elif self.starts_atom():
                result *= self.power()
            else:
                return result

    def power(self) -> Poly2:
        base = self.atom()
        if self.current.kind == "sup":
            return self.raise_to(base)
        if self.at_op("^"):
            self.advance()
            if self.current.kind != "number":
                raise self.fail("a non-negative integer exponent")
            return self.raise_to(base)
        return base

    def atom(self) -> Poly2:
        token = self.current
        if token.kind == "number":
            self.advance()
            value = Fraction(int(token.text))
            if self.at_op("/"):
                self.advance()
                if self.current.kind != "number":
                    raise self.fail("an integer denominator")
                den_token = self.advance()
                if int(den_token.text) == 0:
                    raise ParseError(den_token.pos, "a non-zero denominator", repr(den_token.text))
                value /= int(den_token.text)
            return Poly2.constant(value)
        if token.kind == "var":
            self.advance()
            return Poly2.x() if token.text == "x" else Poly2.y()
        if self.at_op("("):
            self.advance()
            if self.at_op(")"):
                raise self.fail("an expression")
            inner = self.expression()
            self.expect_op(")")
            return inner
        raise self.fail("x, y, a number or '('")


def parse_polynomial(text: str) -> Poly2:
    """
    Parse polynomial text (with an optional '= rhs') into a Poly2; zero is allowed.

    Raises:
        ParseError: on malformed input
    """
    return _Parser(text).equation()


def parse_curve(text: str) -> CurveSpec:
    """
    Parse a curve equation, moving the right-hand side to the left.

    Raises:
        ParseError: on malformed input or an identically-zero equation
    """
    poly = parse_polynomial(text)
    if poly.is_zero:
        raise ParseError(0, "a non-zero equation", "an identically zero polynomial")
    logger.debug(f"parsed curve of total degree {poly.total_degree} from {text!r}")
    return CurveSpec(poly=poly, source=text)
