"""
Text rendering of polynomials and differential forms.

`render` is the canonical form: graded-lex order with explicit `*` and `^`, so
that parsing the output reproduces the polynomial exactly. The juxtaposed style
(``6y - 12``) is only used for the historical differential notation.
"""

from fractions import Fraction

from ..exact import UPoly
from ..poly import DiffForm, Poly2


def _monomial(exponents: tuple[int, ...], variables: tuple[str, ...], joiner: str) -> str:
    parts = []
    for var, e in zip(variables, exponents, strict=True):
        if e == 1:
            parts.append(var)
        elif e > 1:
            parts.append(f"{var}^{e}")
    return joiner.join(parts)


def _join_terms(terms: list[tuple[Fraction, str]], joiner: str) -> str:
    """Assemble signed (coefficient, monomial) pairs as 'a - b + c'."""
    if not terms:
        return "0"
    out: list[str] = []
    for index, (coeff, monomial) in enumerate(terms):
        magnitude = abs(coeff)
        if not monomial:
            body = str(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{magnitude}{joiner}{monomial}"
        if index == 0:
            out.append(f"-{body}" if coeff < 0 else body)
        else:
            out.append(f" - {body}" if coeff < 0 else f" + {body}")
    return "".join(out)


def render(p: Poly2, variables: tuple[str, str] = ("x", "y"), *, juxtapose: bool = False) -> str:
    """
    Canonical text of a polynomial.

    Args:
        p: Polynomial to render
        variables: Names of the first and second variable, e.g. ("u", "w") for shifted forms
        juxtapose: Write products by adjacency (6y) instead of with '*' (6*y)
    """
    joiner = "" if juxtapose else "*"
    return _join_terms([(c, _monomial(m, variables, joiner)) for m, c in p.sorted_terms()], joiner)


def render_upoly(p: UPoly, var: str = "m") -> str:
    """Univariate polynomial, highest degree first."""
    terms = [(c, _monomial((i,), (var,), "*")) for i, c in reversed(list(enumerate(p.coeffs))) if c]
    return _join_terms(terms, "*")


def _differential(a: int, b: int) -> str:
    # dy before dx, as the derivation writes them
    return _monomial((b, a), ("dy", "dx"), "")


def render_diffform(f: DiffForm) -> str:
    """
    Historical differential notation, e.g. ``(6y - 12)dy - 2dx``.

    Constant coefficients are written in front of the differential; any other
    coefficient is parenthesized with the sign of its leading term pulled out, as
    in ``- (6y - 12)dx``. Terms run from the highest power of dy down.
    """
    if f.is_zero:
        return "0"
    out: list[str] = []
    for (a, b), coeff in sorted(f.terms.items(), key=lambda item: (-item[0][1], -item[0][0])):
        symbol = _differential(a, b)
        if coeff.is_constant:
            value = coeff.coeff(0, 0)
            magnitude = abs(value)
            body = f"{'' if magnitude == 1 and symbol else magnitude}{symbol}"
            negative = value < 0
        else:
            negative = coeff.sorted_terms()[0][1] < 0
            body = f"({render(-coeff if negative else coeff, juxtapose=True)}){symbol}"
        if not out:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f" - {body}" if negative else f" + {body}")
    return "".join(out)


def render_differentials(p: Poly2) -> str:
    """A polynomial in (dx, dy), such as an evaluated differential form, e.g. ``-16dy``."""
    return render_diffform(DiffForm({m: Poly2.constant(c) for m, c in p.terms.items()}))
