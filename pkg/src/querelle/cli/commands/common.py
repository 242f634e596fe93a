"""Argument parsing and error-to-exit-code mapping shared by the commands."""

from collections.abc import Iterator
from contextlib import contextmanager
from enum import IntEnum, StrEnum
from fractions import Fraction

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape

from ...errors import MathDomainError, ParseError
from ...logging_config import get_logger
from ...poly import Point

logger = get_logger(__name__)


class ExitCode(IntEnum):
    OK = 0
    USAGE = 1
    PARSE = 2
    MATH = 3
    IO = 4


class OutputFormat(StrEnum):
    JSON = "json"
    TEXT = "text"


class MethodChoice(StrEnum):
    LEIBNIZ = "leibniz"
    ROLLE = "rolle"
    CONE = "cone"
    ALL = "all"


class UsageProblemError(ValueError):
    """A flag value that typer accepted but querelle cannot use."""


def parse_rationals(text: str, count: int, flag: str) -> tuple[Fraction, ...]:
    """Read `count` comma-separated rationals such as '2,2' or '-1/2,3'."""
    parts = [part.strip() for part in text.split(",")]
    if len(parts) != count:
        raise UsageProblemError(f"{flag} expects {count} comma-separated rationals, got {text!r}")
    try:
        return tuple(Fraction(part) for part in parts)
    except (ValueError, ZeroDivisionError) as e:
        raise UsageProblemError(f"{flag} expects rationals such as 2, -3 or 1/2, got {text!r}") from e


def parse_point(text: str) -> Point:
    x0, y0 = parse_rationals(text, 2, "--point")
    return Point(x0, y0)


@contextmanager
def exit_on_error(err_console: Console) -> Iterator[None]:
    """
    Translate library exceptions into exit codes.

    ParseError exits 2, MathDomainError 3, OSError 4, invalid flag values 1.
    """
    try:
        yield
    except ParseError as e:
        err_console.print(f"[red]ParseError:[/red] {escape(str(e))}")
        raise typer.Exit(ExitCode.PARSE) from e
    except MathDomainError as e:
        err_console.print(f"[red]{type(e).__name__}:[/red] {escape(str(e))}")
        raise typer.Exit(ExitCode.MATH) from e
    except OSError as e:
        err_console.print(f"[red]IO error:[/red] {escape(str(e))}")
        raise typer.Exit(ExitCode.IO) from e
    except (UsageProblemError, ValidationError) as e:
        logger.debug(f"rejected flags: {e!r}")
        err_console.print(f"[red]Usage error:[/red] {escape(str(e))}")
        raise typer.Exit(ExitCode.USAGE) from e
