"""
Error model for querelle.

Every failure raised by the engine derives from QuerelleError. The CLI maps
ParseError to exit code 2 and MathDomainError to exit code 3.
"""


class QuerelleError(RuntimeError):
    """Base exception for the engine."""


class ParseError(QuerelleError):
    """Curve text could not be parsed."""

    def __init__(self, position: int, expected: str, found: str) -> None:
        self.position = position
        self.expected = expected
        self.found = found
        super().__init__(f"at position {position}: expected {expected}, found {found}")


class MathDomainError(QuerelleError):
    """A mathematical precondition does not hold."""


class DivisionByZeroError(MathDomainError, ZeroDivisionError):
    """Division of an exact rational by zero."""


class ZeroPolynomialError(MathDomainError):
    """Operation undefined on the zero polynomial."""


class DegenerateInputError(MathDomainError):
    """Input polynomials share a component or lack the required variable."""


class ConstantCurveError(MathDomainError):
    """The curve equation is constant."""


class NotOnCurveError(MathDomainError):
    """The point does not satisfy the curve equation."""

    def __init__(self, point: object, value: object) -> None:
        self.point = point
        self.value = value
        super().__init__(f"point {point} is not on the curve (F = {value})")


class DegenerateAllDerivativesVanishError(MathDomainError):
    """Every iterated differential vanishes at the point."""


class DegenerateAllSlicesVanishError(MathDomainError):
    """Every slice of the substituted equation vanishes at the point."""


class NotIndeterminateError(MathDomainError):
    """The quotient is not of the form 0/0 at the point."""


class InfiniteSubtangentError(MathDomainError):
    """The tangent is parallel to the x-axis away from it."""
