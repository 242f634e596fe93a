"""The analyze command: tangent directions and subtangents at one point."""

import typer
from rich.console import Console

from ...analysis import analyze
from ...config import QuerelleSettings
from ...leibniz import SubtangentConvention
from ...logging_config import setup_logging
from ...models import CurveAnalysis, DirectionReport, MethodReport, SubtangentReport
from ...parse import parse_curve
from .common import MethodChoice, OutputFormat, exit_on_error, parse_point


def _direction_text(direction: DirectionReport) -> str:
    if direction.slope is None:
        return f"vertical (multiplicity {direction.multiplicity})"
    return f"m = {direction.slope.decimal}  [{direction.slope.exact}] (multiplicity {direction.multiplicity})"


def _subtangent_text(report: SubtangentReport) -> str:
    if report.value is None:
        return f"{report.convention}: none ({report.error})"
    if report.vertical:
        return f"{report.convention}: t = 0 (vertical tangent)"
    return f"{report.convention}: t = {report.value.decimal}  [{report.value.exact}]"


def _method_text(name: str, report: MethodReport) -> list[str]:
    lines = [
        f"{name}:",
        f"  slope equation: {report.equation} = 0",
        f"  vertical multiplicity: {report.vertical_multiplicity}",
        f"  iterations: {report.iterations_used}",
    ]
    lines += [f"  direction {_direction_text(d)}" for d in report.directions]
    lines += [f"  subtangent {_subtangent_text(s)}" for s in report.subtangents]
    return lines


def format_analysis(report: CurveAnalysis) -> list[str]:
    """Human-readable rendering of an analysis report."""
    lines = [
        f"curve: {report.curve.canonical} = 0",
        f"point: ({report.point.x}, {report.point.y})",
        f"multiplicity: {report.multiplicity}",
    ]
    for name in ("leibniz", "rolle", "cone"):
        method = getattr(report.methods, name)
        if method is not None:
            lines += _method_text(name, method)
    if report.agreement is not None:
        lines.append(f"agreement: {str(report.agreement).lower()}")
    if report.trace:
        lines += ["", *report.trace]
    return lines


def execute_analyze(  # noqa: PLR0913
    curve: str,
    point: str,
    method: MethodChoice,
    output_format: OutputFormat,
    convention: SubtangentConvention,
    trace: bool,
    precision: int,
    log_level: str,
    err_console: Console,
) -> None:
    """
    Execute the analyze command.

    Args:
        curve: Curve text, e.g. "y - x^2" or "x^2 + y^2 = 25"
        point: Point as "x,y" with rational coordinates
        method: One method or all three
        output_format: json or text
        convention: Subtangent convention
        trace: Include the derivation trace
        precision: Decimal digits printed next to exact values
        log_level: Logging level for the querelle logger
        err_console: Console for diagnostics (stderr)
    """
    with exit_on_error(err_console):
        settings = QuerelleSettings(
            general={"log_level": log_level},
            display={"precision": precision},
            analysis={"method": method.value, "convention": convention, "trace": trace},
        )
        setup_logging(settings.general.log_level)
        at = parse_point(point)
        spec = parse_curve(curve)
        report = analyze(
            spec,
            at,
            method=settings.analysis.method,
            convention=settings.analysis.convention,
            precision=settings.display.precision,
            trace=settings.analysis.trace,
        )

    if output_format is OutputFormat.JSON:
        typer.echo(report.model_dump_json(indent=2, exclude={"trace"} if report.trace is None else None))
    else:
        for line in format_analysis(report):
            typer.echo(line)
