"""The demo-querelle command: replay the worked derivation on the quartic."""

import typer
from rich.console import Console

from ...analysis import demo_trace
from ...config import QuerelleSettings
from .common import exit_on_error


def execute_demo(precision: int, err_console: Console) -> None:
    with exit_on_error(err_console):
        settings = QuerelleSettings(display={"precision": precision})
        lines = demo_trace(settings.display.precision)
    for line in lines:
        typer.echo(line)
