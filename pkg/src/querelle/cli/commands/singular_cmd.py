"""The singular command: rational singular points of a curve."""

import typer
from rich.console import Console

from ...analysis import singular_report
from ...config import QuerelleSettings
from ...logging_config import setup_logging
from ...models import SingularReport
from ...parse import parse_curve
from .common import OutputFormat, exit_on_error


def format_singular(report: SingularReport) -> list[str]:
    lines = [f"curve: {report.curve.canonical} = 0"]
    if not report.singular_points:
        lines.append("no singular points with rational coordinates")
    for entry in report.singular_points:
        lines.append(
            f"({entry.point.x}, {entry.point.y}): multiplicity {entry.multiplicity}, {entry.kind}, "
            f"tangent cone {entry.cone} = 0"
        )
        for direction in entry.directions:
            if direction.slope is None:
                lines.append(f"  vertical (multiplicity {direction.multiplicity})")
            else:
                lines.append(f"  m = {direction.slope.decimal}  [{direction.slope.exact}]")
    return lines


def execute_singular(
    curve: str,
    output_format: OutputFormat,
    precision: int,
    log_level: str,
    err_console: Console,
) -> None:
    """Search the rational singular points of `curve` and print them."""
    with exit_on_error(err_console):
        settings = QuerelleSettings(general={"log_level": log_level}, display={"precision": precision})
        setup_logging(settings.general.log_level)
        report = singular_report(parse_curve(curve), settings.display.precision)

    if output_format is OutputFormat.JSON:
        typer.echo(report.model_dump_json(indent=2))
    else:
        for line in format_singular(report):
            typer.echo(line)
