import click

from skewcat.cli.common import FILE, emit, handle_errors, output_options
from skewcat.core.io import load_input
from skewcat.modules.warpings import check_redundancy_algebra, check_warping_algebra
from skewcat.utils.logger import setup_logger

logger = setup_logger(__name__)

HELP = "Algebras for a skew warping: check the axioms, test redundancy of axiom 3."
EPILOG = """
[EXAMPLE]
    $ skewcat algebra check free-algebra.json
    $ skewcat algebra redundancy free-algebra.json --format json
"""


@click.group(name="algebra", help=HELP, epilog=EPILOG)
def main():
    pass


@main.command(name="check", help="Check the three algebra axioms.")
@click.argument("file", type=FILE)
@output_options
def check(file: str, fmt: str, out: str):
    with handle_errors():
        _, a = load_input(file, ["warping-algebra"])
        report = check_warping_algebra(a)
    emit(report, fmt, out, [file])


@main.command(name="redundancy", help="Derive axiom 3 from axioms 1-2.")
@click.argument("file", type=FILE)
@output_options
def redundancy(file: str, fmt: str, out: str):
    with handle_errors():
        _, a = load_input(file, ["warping-algebra"])
        report = check_redundancy_algebra(a)
    emit(report, fmt, out, [file])


if __name__ == '__main__':
    main()
