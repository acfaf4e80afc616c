import sys

import click

from skewcat.cli.common import bound_option, bounds_from, emit_document, handle_errors
from skewcat.core.io import dump
from skewcat.modules.fixtures import FIXTURES, get_fixture, validate_fixture
from skewcat.utils.logger import setup_logger

logger = setup_logger(__name__)

HELP = "The embedded fixture library; any FILE argument accepts fixture:NAME."
EPILOG = """
[EXAMPLE]
    $ skewcat fixtures list
    $ skewcat fixtures show z2-strict --format json -o z2-strict.json
    $ skewcat fixtures validate
"""


@click.group(name="fixtures", help=HELP, epilog=EPILOG)
def main():
    pass


@main.command(name="list", help="List fixture names with their kinds.")
def list_():
    width = max(len(name) for name in FIXTURES)
    for fixture in FIXTURES.values():
        click.echo(f"{fixture.name:<{width}}  {fixture.kind:<12}  {fixture.description}")


@main.command(name="show", help="Print a fixture as a JSON document.")
@click.argument("name")
@click.option(
    "-o", "--out",
    type=click.Path(dir_okay=False, writable=True),
    help="Write the document to PATH instead of standard output"
)
def show(name: str, out: str):
    with handle_errors():
        emit_document(dump(get_fixture(name).build()), "json", out)


@main.command(name="validate", help="Run every fixture through its validator.")
@bound_option
def validate(bound: int):
    failed = []
    with handle_errors():
        for name in FIXTURES:
            report = validate_fixture(name, bounds_from(bound))
            click.echo(f"{name}: {report.status}")
            if not report.ok:
                failed.append(name)
    sys.exit(1 if failed else 0)


if __name__ == '__main__':
    main()
