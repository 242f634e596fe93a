"""
Per-point analysis: run the three methods, compare them, and build reports and traces.
"""

from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .cone import classify_point, multiplicity_at, singular_points_rational, tangent_cone_at
from .errors import InfiniteSubtangentError
from .exact import IsolatedRoot
from .leibniz import (
    Indeterminate00,
    InfiniteVertical,
    SlopeEquation,
    SubtangentConvention,
    TangentDirection,
    classify_quotient,
    directions_from_equation,
    implicit_slope,
    indeterminacy_witnesses,
    lhopital_iterate,
    lhopital_trace,
    subtangent,
)
from .logging_config import get_logger
from .models import (
    CurveAnalysis,
    CurveModel,
    DirectionReport,
    ExactNumber,
    MethodReport,
    MethodsReport,
    PointModel,
    SingularPointModel,
    SingularReport,
    SubtangentReport,
)
from .parse import CurveSpec, parse_curve, render, render_differentials, render_diffform, render_upoly
from .poly import Point, Poly2
from .rolle import rolle_directions, slice_sequence

logger = get_logger(__name__)

type MethodName = Literal["leibniz", "rolle", "cone"]
METHODS: tuple[MethodName, ...] = ("leibniz", "rolle", "cone")

QUARTIC = "y^4 - 8y^3 + 16y^2 - 12xy^2 + 48xy + 4x^2 - 64x = 0"
DOUBLE_POINT = Point(2, 2)


@dataclass(frozen=True)
class MethodResult:
    name: MethodName
    equation: SlopeEquation
    directions: list[TangentDirection]


_RUNNERS: dict[MethodName, Callable[[Poly2, Point], SlopeEquation]] = {
    "leibniz": lambda curve, at: lhopital_iterate(implicit_slope(curve), at),
    "rolle": rolle_directions,
    "cone": lambda curve, at: tangent_cone_at(curve, at).equation,
}


def run_method(name: MethodName, curve: Poly2, at: Point) -> MethodResult:
    equation = _RUNNERS[name](curve, at)
    return MethodResult(name=name, equation=equation, directions=directions_from_equation(equation))


def methods_agree(results: Sequence[MethodResult]) -> bool | None:
    """Same slope equation and same direction multiset for every result; None for fewer than two."""
    if len(results) < 2:
        return None
    first = results[0]
    for other in results[1:]:
        if other.equation.poly_m != first.equation.poly_m:
            return False
        if other.equation.vertical_multiplicity != first.equation.vertical_multiplicity:
            return False
        if len(other.directions) != len(first.directions):
            return False
        if not all(a.same_as(b) for a, b in zip(first.directions, other.directions, strict=True)):
            return False
    return True


# ----------------------------------------------------------------------
# Report building
# ----------------------------------------------------------------------


def exact_number(root: IsolatedRoot, var: str, precision: int) -> ExactNumber:
    annihilator = render_upoly(root.annihilator, var)
    if root.exact_rational is not None:
        value = str(root.exact_rational)
        return ExactNumber(
            exact=value,
            annihilator=annihilator,
            interval=(value, value),
            decimal=root.to_decimal(precision),
        )
    refined = root.refine(Fraction(1, 10 ** (precision + 2)))
    return ExactNumber(
        exact=f"root of {annihilator} in [{refined.lo}, {refined.hi}]",
        annihilator=annihilator,
        interval=(str(refined.lo), str(refined.hi)),
        decimal=refined.to_decimal(precision),
    )


def direction_report(direction: TangentDirection, precision: int) -> DirectionReport:
    if direction.slope is None:
        return DirectionReport(vertical=True, multiplicity=direction.multiplicity)
    return DirectionReport(
        vertical=False,
        multiplicity=direction.multiplicity,
        slope=exact_number(direction.slope, "m", precision),
    )


def subtangent_report(
    direction: TangentDirection, at: Point, convention: SubtangentConvention, precision: int
) -> SubtangentReport:
    try:
        value = subtangent(at, direction.slope, convention)
    except InfiniteSubtangentError as e:
        return SubtangentReport(convention=convention.value, vertical=direction.is_vertical, error=str(e))
    return SubtangentReport(
        convention=convention.value,
        vertical=value.vertical,
        value=exact_number(value.value, "t", precision),
    )


def method_report(
    result: MethodResult, at: Point, convention: SubtangentConvention, precision: int
) -> MethodReport:
    return MethodReport(
        equation=render_upoly(result.equation.poly_m, "m"),
        vertical_multiplicity=result.equation.vertical_multiplicity,
        iterations_used=result.equation.iterations_used,
        directions=[direction_report(d, precision) for d in result.directions],
        subtangents=[subtangent_report(d, at, convention, precision) for d in result.directions],
    )


def curve_model(spec: CurveSpec) -> CurveModel:
    return CurveModel(source=spec.source, canonical=render(spec.poly))


def point_model(at: Point) -> PointModel:
    return PointModel(x=str(at.x0), y=str(at.y0))


def analyze(
    spec: CurveSpec,
    at: Point,
    *,
    method: MethodName | Literal["all"] = "all",
    convention: SubtangentConvention = SubtangentConvention.PROJECTION,
    precision: int = 12,
    trace: bool = False,
) -> CurveAnalysis:
    """
    Analyze the curve at a point with one or all methods.

    Raises:
        NotOnCurveError: if the point is not on the curve
        MathDomainError: for any other failing precondition
    """
    multiplicity = multiplicity_at(spec.poly, at)
    names = METHODS if method == "all" else (method,)
    results = [run_method(name, spec.poly, at) for name in names]
    agreement = methods_agree(results)
    logger.info(f"analyzed {len(results)} methods at {at}: multiplicity {multiplicity}, agreement {agreement}")
    reports = {r.name: method_report(r, at, convention, precision) for r in results}
    return CurveAnalysis(
        curve=curve_model(spec),
        point=point_model(at),
        multiplicity=multiplicity,
        methods=MethodsReport(**reports),
        agreement=agreement,
        trace=derivation_trace(spec.poly, at, (convention,), precision) if trace else None,
    )


def singular_report(spec: CurveSpec, precision: int = 12) -> SingularReport:
    points = [
        SingularPointModel(
            point=point_model(report.point),
            multiplicity=report.multiplicity,
            kind=classify_point(spec.poly, report.point).value,
            cone=render(report.cone.form, ("u", "w")),
            directions=[direction_report(d, precision) for d in report.cone.directions],
        )
        for report in singular_points_rational(spec.poly)
    ]
    return SingularReport(curve=curve_model(spec), singular_points=points)


# ----------------------------------------------------------------------
# Derivation trace
# ----------------------------------------------------------------------


def _ratio_text(num_value: Poly2, den_value: Poly2) -> str:
    """dy/dx as the quotient of two evaluated differentials, reduced when both are single terms."""
    if len(num_value.terms) == 1 and len(den_value.terms) == 1:
        (mon_n, c_n), (mon_d, c_d) = next(iter(num_value.terms.items())), next(iter(den_value.terms.items()))
        ratio = c_n / c_d
        top = render_differentials(Poly2({mon_n: ratio.numerator}))
        bottom = render_differentials(Poly2({mon_d: ratio.denominator}))
        return f"dy/dx = {top}/({bottom})" if ratio.denominator != 1 else f"dy/dx = {top}/{bottom}"
    return f"dy/dx = ({render_differentials(num_value)})/({render_differentials(den_value)})"


def _power_law(equation: SlopeEquation) -> str | None:
    """'dy^n/dx^n = c' when the slope equation is a m^n - b."""
    coeffs = equation.poly_m.coeffs
    n = len(coeffs) - 1
    if n < 2 or any(coeffs[1:n]):
        return None
    value = -coeffs[0] / coeffs[n]
    return f"dy^{n}/dx^{n} = {value}"


def _direction_line(direction: TangentDirection, precision: int) -> str:
    if direction.slope is None:
        return f"  vertical tangent (multiplicity {direction.multiplicity})"
    number = exact_number(direction.slope, "m", precision)
    return f"  m = {number.exact} ~ {number.decimal} (multiplicity {direction.multiplicity})"


def _subtangent_line(direction: TangentDirection, at: Point, convention: SubtangentConvention, precision: int) -> str:
    report = subtangent_report(direction, at, convention, precision)
    if report.value is None:
        return f"  {convention.value}: no finite subtangent ({report.error})"
    if report.vertical:
        return f"  {convention.value}: t = 0 (vertical tangent)"
    return f"  {convention.value}: t = {report.value.exact} ~ {report.value.decimal}"


def _leibniz_lines(curve: Poly2, at: Point, precision: int) -> tuple[list[str], list[TangentDirection]]:
    s = implicit_slope(curve)
    lines = [
        "[differential method]",
        f"dy/dx = ({render(s.num, juxtapose=True)})/({render(s.den, juxtapose=True)})",
    ]
    verdict = classify_quotient(s, at)
    num_at, den_at = s.num.at(at), s.den.at(at)
    if isinstance(verdict, Indeterminate00):
        witnesses = indeterminacy_witnesses([1, 2, Fraction(1, 8), -3])
        samples = ", ".join(str(b) for b, _ in witnesses)
        lines.append(f"at {at}: numerator = {num_at}, denominator = {den_at}: indeterminate 0/0")
        lines.append(f"0 = b*0 holds for b = {samples}: 0/0 names no single value")
    elif isinstance(verdict, InfiniteVertical):
        lines.append(f"at {at}: numerator = {num_at}, denominator = 0: infinite (vertical tangent)")
    else:
        lines.append(f"at {at}: dy/dx = {verdict.value}")

    trace = lhopital_trace(s, at)
    for step in trace.steps[1:]:
        power = "" if step.k == 1 else f"^{step.k}"
        lines.append(f"d{power}(numerator) = {render_diffform(step.num_form)}")
        lines.append(f"d{power}(denominator) = {render_diffform(step.den_form)}")
        lines.append(
            f"at {at}: d{power}(numerator) = {render_differentials(step.num_value)}, "
            f"d{power}(denominator) = {render_differentials(step.den_value)}"
        )
    last = trace.steps[-1]
    if trace.steps[1:]:
        lines.append(_ratio_text(last.num_value, last.den_value))
        lines.append(f"multiplying the extremes: {render_differentials(trace.relation)} = 0")
    law = _power_law(trace.equation)
    if law is not None:
        lines.append(law)
    lines.append(f"slope equation: {render_upoly(trace.equation.poly_m, 'm')} = 0")
    directions = directions_from_equation(trace.equation)
    lines.extend(_direction_line(d, precision) for d in directions)
    return lines, directions


def _rolle_lines(curve: Poly2, at: Point) -> list[str]:
    sequence = slice_sequence(curve, at)
    lines = ["[slice method]"]
    last = sequence.first_nonzero or len(sequence.slices)
    lines.extend(f"slice {k} = {render(sequence.slices[k], ('v', 'z'))}" for k in range(1, last + 1))
    lines.append(f"first non-vanishing slice: {sequence.first_nonzero}")
    equation = rolle_directions(curve, at)
    lines.append(f"with m = z/v: {render_upoly(equation.poly_m, 'm')} = 0")
    return lines


def _cone_lines(curve: Poly2, at: Point) -> list[str]:
    cone = tangent_cone_at(curve, at)
    return [
        "[tangent cone]",
        f"lowest form of F({at.x0} + u, {at.y0} + w): {render(cone.form, ('u', 'w'))} (degree {cone.k})",
        f"point kind: {classify_point(curve, at).value}",
    ]


def derivation_trace(
    curve: Poly2,
    at: Point,
    conventions: Sequence[SubtangentConvention] = (SubtangentConvention.PROJECTION,),
    precision: int = 12,
) -> list[str]:
    """The worked derivation at a point, one rendered line per step."""
    lines, directions = _leibniz_lines(curve, at, precision)
    lines.append("subtangents:")
    for convention in conventions:
        lines.extend(_subtangent_line(d, at, convention, precision) for d in directions)
    lines.extend(_rolle_lines(curve, at))
    lines.extend(_cone_lines(curve, at))
    results = [run_method(name, curve, at) for name in METHODS]
    lines.append(f"three-method agreement: {str(methods_agree(results)).lower()}")
    return lines


def demo_trace(precision: int = 12) -> list[str]:
    """The full replay on the quartic and its double point, with both subtangent conventions."""
    spec = parse_curve(QUARTIC)
    header = [
        f"curve: {spec.source}",
        f"point: {DOUBLE_POINT}",
    ]
    lines = derivation_trace(spec.poly, DOUBLE_POINT, tuple(SubtangentConvention), precision)
    caveat = (
        f"note: {SubtangentConvention.PROJECTION} reads t = y dx/dy, "
        f"{SubtangentConvention.ALTERNATE} reads t = x dy/dx; "
        "the two conventions give different values and neither is preferred here"
    )
    index = lines.index("[slice method]")
    return [*header, *lines[:index], caveat, *lines[index:]]
