"""
Resultants with respect to y.

The Sylvester matrix has entries in Z[x] once denominators are cleared, so the
determinant is computed with Bareiss' fraction-free elimination: every division
performed is exact.
"""

from fractions import Fraction

from ..errors import DegenerateInputError
from ..exact import UPoly, common_denominator
from ..logging_config import get_logger
from .poly2 import Poly2

logger = get_logger(__name__)


def sylvester_matrix(f: list[UPoly], g: list[UPoly]) -> list[list[UPoly]]:
    """
    Sylvester matrix of two polynomials given by coefficient lists (constant term first).

    The first deg(g) rows hold shifted coefficients of f, the last deg(f) rows those of g.
    """
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    zero = UPoly()
    rows: list[list[UPoly]] = []
    for shift in range(n):
        row = [zero] * size
        for k, c in enumerate(reversed(f)):
            row[shift + k] = c
        rows.append(row)
    for shift in range(m):
        row = [zero] * size
        for k, c in enumerate(reversed(g)):
            row[shift + k] = c
        rows.append(row)
    return rows


def det_bareiss(matrix: list[list[UPoly]]) -> UPoly:
    """Determinant by fraction-free Gaussian elimination with row pivoting."""
    rows = [list(row) for row in matrix]
    n = len(rows)
    if n == 0:
        return UPoly([1])
    sign = 1
    previous = UPoly([1])
    for k in range(n - 1):
        if rows[k][k].is_zero:
            for i in range(k + 1, n):
                if not rows[i][k].is_zero:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return UPoly()
        pivot = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * pivot - rows[i][k] * rows[k][j]) // previous
            rows[i][k] = UPoly()
        previous = pivot
    return rows[n - 1][n - 1] * sign


def resultant_y(f: Poly2, g: Poly2) -> UPoly:
    """
    Resultant of f and g with respect to y, a polynomial in x.

    The value is the Sylvester determinant of f and g themselves: denominators are
    cleared for the elimination and the scaling is divided back out. No sign
    normalization is applied.

    Raises:
        DegenerateInputError: if f or g does not involve y
    """
    m, n = f.degree_in("y"), g.degree_in("y")
    if m < 1 or n < 1:
        raise DegenerateInputError("resultant needs both polynomials to have positive degree in y")
    cf = common_denominator(f.terms.values())
    cg = common_denominator(g.terms.values())
    f_rows = [c * cf for c in f.coefficients_in_y()]
    g_rows = [c * cg for c in g.coefficients_in_y()]
    det = det_bareiss(sylvester_matrix(f_rows, g_rows))
    logger.debug(f"resultant of y-degrees {m} and {n} has x-degree {det.degree}")
    return det * Fraction(1, cf**n * cg**m)
