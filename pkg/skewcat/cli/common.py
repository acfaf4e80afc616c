"""
Options and output handling shared by the subcommands.
"""

import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Iterable, Optional

import click

from ..core.io import FIXTURE_PREFIX, write_json
from ..core.report import Report
from ..utils.config import BoundsConfig, OutputConfig
from ..utils.errors import SkewcatError
from ..utils.logger import setup_logger

logger = setup_logger(__name__)

FILE = click.Path(dir_okay=False)


def output_options(func):
    """--format and --out."""
    func = click.option(
        "-o", "--out",
        type=click.Path(dir_okay=False, writable=True),
        help="Write the output to PATH instead of standard output"
    )(func)
    func = click.option(
        "--format", "fmt",
        type=click.Choice(["text", "json"]),
        default=OutputConfig().format,
        show_default=True,
        help="Output format"
    )(func)
    return func


def bound_option(func):
    return click.option(
        "-b", "--bound",
        type=int,
        default=BoundsConfig().max_hom_size,
        show_default=True,
        help="Largest hom set an enumeration will fill"
    )(func)


def bounds_from(bound: int) -> BoundsConfig:
    return BoundsConfig(max_hom_size=bound)


def _write(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text + "\n")
        logger.info(f"Output written to {out}")
    else:
        click.echo(text)


def emit(report: Report, fmt: str, out: Optional[str] = None,
         sources: Iterable[str] = ()) -> None:
    """Print or save a report, then exit with its exit code."""
    for source in sources:
        if not source.startswith(FIXTURE_PREFIX) and Path(source).is_file():
            report.add_digest(source)
    if fmt == "json":
        _write(report.to_json(OutputConfig().indent), out)
    else:
        _write(report.to_text(), out)
    sys.exit(report.exit_code)


def emit_document(doc: Any, fmt: str, out: Optional[str] = None, summary: str = "") -> None:
    """Print or save a JSON document; text format prints the summary only."""
    if fmt == "json" or out:
        if out:
            write_json(doc, out, OutputConfig().indent)
            logger.info(f"Output written to {out}")
            if summary and fmt == "text":
                click.echo(summary)
        else:
            click.echo(write_json(doc, indent=OutputConfig().indent))
    else:
        click.echo(summary)


@contextmanager
def handle_errors():
    """Log a SkewcatError and exit with its code."""
    try:
        yield
    except SkewcatError as e:
        logger.error(str(e))
        sys.exit(e.exit_code)
