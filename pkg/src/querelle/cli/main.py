"""
Querelle CLI entry point.

Commands:
- querelle analyze CURVE --point X,Y   : tangent directions and subtangents at a point
- querelle singular CURVE              : rational singular points
- querelle plot CURVE [--point X,Y]    : SVG figure with tangent lines
- querelle demo-querelle               : replay the derivation on the quartic
- querelle render CURVE                : canonical form of a curve
- querelle version                     : version information
"""

import sys
from pathlib import Path
from typing import Annotated

import click
import typer
from rich.console import Console
from rich.markup import escape

from .. import __version__
from ..leibniz import SubtangentConvention
from .commands.common import ExitCode, MethodChoice, OutputFormat, exit_on_error

app = typer.Typer(
    name="querelle",
    help="Exact tangents and subtangents of plane algebraic curves, at regular and multiple points",
    add_completion=False,
    no_args_is_help=True,
)

console = Console()
err_console = Console(stderr=True)

CurveArg = Annotated[str, typer.Argument(help='Curve text, e.g. "y - x^2" or "x^2 + y^2 = 25"')]
LogLevelOpt = Annotated[str, typer.Option("--log-level", help="DEBUG, INFO, WARNING or ERROR")]
PrecisionOpt = Annotated[int, typer.Option("--precision", help="Decimal digits printed next to exact values")]
FormatOpt = Annotated[OutputFormat, typer.Option("--format", help="Output format")]
CONVENTION_HELP = "Subtangent convention: footnote21 (t = y dx/dy) or alternate_x_dydx (t = x dy/dx)"


@app.command()
def analyze(  # noqa: PLR0913
    curve: CurveArg,
    point: Annotated[str, typer.Option("--point", "-p", help="Point as x,y with rational coordinates")],
    method: Annotated[MethodChoice, typer.Option("--method", "-m", help="Method to run")] = MethodChoice.ALL,
    output_format: FormatOpt = OutputFormat.JSON,
    convention: Annotated[SubtangentConvention, typer.Option("--convention", help=CONVENTION_HELP)] = (
        SubtangentConvention.PROJECTION
    ),
    trace: Annotated[bool, typer.Option("--trace", help="Include the derivation trace")] = False,
    precision: PrecisionOpt = 12,
    log_level: LogLevelOpt = "WARNING",
) -> None:
    """
    Tangent directions and subtangents of CURVE at a point.

    Examples:
        querelle analyze "y^4 - 8y^3 + 16y^2 - 12xy^2 + 48xy + 4x^2 - 64x" --point 2,2
        querelle analyze "y - x^2" --point 3,9 --format text
    """
    from .commands.analyze_cmd import execute_analyze

    execute_analyze(curve, point, method, output_format, convention, trace, precision, log_level, err_console)


@app.command()
def singular(
    curve: CurveArg,
    output_format: FormatOpt = OutputFormat.JSON,
    precision: PrecisionOpt = 12,
    log_level: LogLevelOpt = "WARNING",
) -> None:
    """Singular points of CURVE with rational coordinates."""
    from .commands.singular_cmd import execute_singular

    execute_singular(curve, output_format, precision, log_level, err_console)


@app.command()
def plot(  # noqa: PLR0913
    curve: CurveArg,
    point: Annotated[str | None, typer.Option("--point", "-p", help="Draw the tangents at x,y")] = None,
    bbox: Annotated[str, typer.Option("--bbox", help="xmin,xmax,ymin,ymax")] = "-2,10,-4,10",
    grid: Annotated[int, typer.Option("--grid", help="Marching-squares cells per axis")] = 512,
    width: Annotated[int, typer.Option("--width", help="Figure width in pixels")] = 640,
    height: Annotated[int, typer.Option("--height", help="Figure height in pixels")] = 640,
    out: Annotated[Path | None, typer.Option("--out", "-o", help="SVG file (default: standard output)")] = None,
    log_level: LogLevelOpt = "WARNING",
) -> None:
    """
    SVG figure of CURVE, with its tangent lines at --point.

    Example:
        querelle plot "y^4 - 8y^3 + 16y^2 - 12xy^2 + 48xy + 4x^2 - 64x" --point 2,2 --out quartic.svg
    """
    from .commands.plot_cmd import execute_plot

    execute_plot(curve, point, bbox, grid, width, height, out, log_level, console, err_console)


@app.command("demo-querelle")
def demo_querelle(precision: PrecisionOpt = 12) -> None:
    """Replay the derivation of the two tangents at the double point (2, 2) of the quartic."""
    from .commands.demo_cmd import execute_demo

    execute_demo(precision, err_console)


@app.command()
def render(curve: CurveArg) -> None:
    """Print the canonical form of CURVE."""
    from ..parse import parse_curve
    from ..parse import render as render_poly

    with exit_on_error(err_console):
        spec = parse_curve(curve)
    typer.echo(f"{render_poly(spec.poly)} = 0")


@app.command()
def version() -> None:
    """Show querelle version information."""
    console.print(f"[cyan]querelle v{__version__}[/cyan]")
    console.print("[dim]Exact tangents at multiple points of algebraic curves[/dim]")


def run(argv: list[str] | None = None) -> None:
    """
    Console-script entry point.

    click reports usage errors with exit status 2, which querelle reserves for
    parse errors; usage errors exit 1 here.
    """
    try:
        code = app(args=argv, prog_name="querelle", standalone_mode=False)
    except click.UsageError as e:
        err_console.print(f"[red]Usage error:[/red] {escape(e.format_message())}")
        sys.exit(ExitCode.USAGE)
    except click.exceptions.Abort:
        sys.exit(ExitCode.USAGE)
    sys.exit(code if isinstance(code, int) else ExitCode.OK)


if __name__ == "__main__":
    run()
