"""
Exact rational helpers on top of fractions.Fraction.

Integers are Python ints (arbitrary precision); rationals are Fractions, which
already keep den > 0 and gcd(|num|, den) = 1.
"""

import math
import operator
from collections.abc import Callable, Iterable
from fractions import Fraction

from ..errors import DivisionByZeroError

_OPERATORS: dict[str, Callable[[Fraction, Fraction], Fraction]] = {
    "+": operator.add,
    "-": operator.sub,
    "−": operator.sub,
    "*": operator.mul,
    "×": operator.mul,
    "/": operator.truediv,
    "÷": operator.truediv,
}


def rational_arith(a: Fraction | int, b: Fraction | int, op: str) -> Fraction:
    """
    Apply an arithmetic operator to two rationals.

    Args:
        a: Left operand
        b: Right operand
        op: One of + - * / (the unicode forms − × ÷ are accepted too)

    Returns:
        Canonical exact result

    Raises:
        DivisionByZeroError: on division by zero
        ValueError: for an unknown operator
    """
    try:
        func = _OPERATORS[op]
    except KeyError:
        raise ValueError(f"unknown operator {op!r}") from None
    try:
        return Fraction(func(Fraction(a), Fraction(b)))
    except ZeroDivisionError:
        raise DivisionByZeroError(f"{a} {op} {b}") from None


def rational_content(values: Iterable[Fraction]) -> Fraction:
    """
    Positive rational gcd of a collection: gcd of numerators over lcm of denominators.

    Zero entries are ignored; an all-zero collection has content 0.
    """
    nums: list[int] = []
    dens: list[int] = []
    for value in values:
        if value:
            nums.append(value.numerator)
            dens.append(value.denominator)
    if not nums:
        return Fraction(0)
    return Fraction(math.gcd(*nums), math.lcm(*dens))


def common_denominator(values: Iterable[Fraction]) -> int:
    """Least common multiple of the denominators (1 for an empty collection)."""
    return math.lcm(1, *(value.denominator for value in values))


def sign(value: Fraction | int) -> int:
    """Sign of an exact number as -1, 0 or 1."""
    return (value > 0) - (value < 0)
