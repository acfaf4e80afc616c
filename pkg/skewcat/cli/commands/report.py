import json
import sys

import click

from skewcat.cli.common import FILE, emit, handle_errors, output_options
from skewcat.core.io import read_json
from skewcat.core.report import TAG_INVENTORY, Report
from skewcat.utils.errors import FormatError
from skewcat.utils.logger import setup_logger

logger = setup_logger(__name__)

HELP = "Work with saved reports and the diagram tag inventory."
EPILOG = """
[WORKFLOW]
tags     : every diagram tag a report can carry, by family
show     : render a saved JSON report as text or JSON
coverage : which inventory tags a set of saved reports exercises

[EXAMPLE]
    $ skewcat report tags
    $ skewcat report show z2-report.json
    $ skewcat report coverage reports/*.json
"""


def _read_report(path: str) -> Report:
    data = read_json(path)
    try:
        return Report.from_dict(data)
    except (KeyError, TypeError) as e:
        raise FormatError(f"not a report: {e!r}", location=path)


@click.group(name="report", help=HELP, epilog=EPILOG)
def main():
    pass


@main.command(name="tags", help="List the diagram tag inventory.")
@click.option(
    "--format", "fmt",
    type=click.Choice(["text", "json"]),
    default="text",
    show_default=True,
    help="Output format"
)
def tags(fmt: str):
    if fmt == "json":
        click.echo(json.dumps({family: list(names) for family, names in TAG_INVENTORY.items()}, indent=2))
        return
    for family, names in TAG_INVENTORY.items():
        click.echo(f"{family} ({len(names)})")
        for name in names:
            click.echo(f"  {name}")


@main.command(name="show", help="Render a saved report.")
@click.argument("file", type=FILE)
@output_options
def show(file: str, fmt: str, out: str):
    with handle_errors():
        report = _read_report(file)
    emit(report, fmt, out)


@main.command(name="coverage", help="Inventory tags exercised by saved reports.")
@click.argument("files", nargs=-1, required=True, type=FILE)
def coverage(files):
    with handle_errors():
        seen = set()
        for path in files:
            seen.update(_read_report(path).tags())
    missing = 0
    for family, names in TAG_INVENTORY.items():
        absent = [name for name in names if name not in seen]
        missing += len(absent)
        click.echo(f"{family}: {len(names) - len(absent)}/{len(names)}"
                   + (f" (missing: {', '.join(absent)})" if absent else ""))
    sys.exit(1 if missing else 0)


if __name__ == '__main__':
    main()
