"""The plot command: SVG figure of a curve with its tangents at a point."""

from pathlib import Path

import typer
from rich.console import Console

from ...cone import tangent_cone_at
from ...config import QuerelleSettings
from ...leibniz import TangentDirection
from ...logging_config import get_logger, setup_logging
from ...parse import parse_curve
from ...visualization import render_svg
from .common import exit_on_error, parse_point, parse_rationals

logger = get_logger(__name__)


def execute_plot(  # noqa: PLR0913
    curve: str,
    point: str | None,
    bbox: str,
    grid: int,
    width: int,
    height: int,
    out: Path | None,
    log_level: str,
    console: Console,
    err_console: Console,
) -> None:
    """
    Render the curve, and the tangent lines at `point` when one is given.

    The SVG goes to `out`, or to standard output when no file is named.
    """
    with exit_on_error(err_console):
        settings = QuerelleSettings(
            general={"log_level": log_level},
            plot={
                "bbox": parse_rationals(bbox, 4, "--bbox"),
                "grid": grid,
                "width": width,
                "height": height,
            },
        )
        setup_logging(settings.general.log_level)
        spec = parse_curve(curve)
        at = parse_point(point) if point is not None else None
        directions: list[TangentDirection] = []
        if at is not None:
            directions = tangent_cone_at(spec.poly, at).directions
        svg = render_svg(spec.poly, settings.plot, at, directions)

        if out is None:
            typer.echo(svg, nl=False)
            return
        out.write_text(svg, encoding="utf-8")
        logger.info(f"wrote {len(svg)} bytes to {out}")

    console.print(f"[green]Wrote[/green] {out}")
