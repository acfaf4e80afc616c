import click

from skewcat.cli.common import FILE, bound_option, bounds_from, emit, handle_errors, output_options
from skewcat.core.fincat import validate_category
from skewcat.core.io import load_input
from skewcat.modules.fixtures import validate_fixture
from skewcat.modules.mwmonads import check_monad
from skewcat.modules.profhom import check_prof
from skewcat.modules.skewstruct import check_skew_bicat, check_skew_moncat
from skewcat.utils.logger import setup_logger

logger = setup_logger(__name__)

HELP = "Check a finite structure against its laws."
EPILOG = """
[WORKFLOW]
1. Load FILE (JSON or fixture:NAME) and validate it against its schema
2. Check the structure: tables first, then naturality and axioms
3. Print the report; the exit code is the worst status found

[EXAMPLE]
Strict Z/2 as a skew monoidal category:
    $ skewcat check skew-moncat fixture:z2-strict
A category file, JSON report saved:
    $ skewcat check category ch3.json --format json -o ch3-report.json
"""

CHECKERS = {
    "category": ("category", validate_category),
    "skew-moncat": ("skew-moncat", check_skew_moncat),
    "skew-bicat": ("skew-bicat", check_skew_bicat),
    "monad": ("monad", check_monad),
    "profunctor": ("profunctor", check_prof),
}


@click.group(name="check", help=HELP, epilog=EPILOG)
def main():
    pass


def _checker(target: str, kind: str, func):
    @main.command(name=target, help=f"Check a {target} file.")
    @click.argument("file", type=FILE)
    @output_options
    def command(file: str, fmt: str, out: str):
        with handle_errors():
            _, value = load_input(file, [kind])
            report = func(value)
        emit(report, fmt, out, [file])

    return command


for _target, (_kind, _func) in CHECKERS.items():
    _checker(_target, _kind, _func)


@main.command(name="fixture", help="Run the validator of a named fixture.")
@click.argument("name")
@bound_option
@output_options
def fixture(name: str, bound: int, fmt: str, out: str):
    with handle_errors():
        report = validate_fixture(name, bounds_from(bound))
    emit(report, fmt, out)


if __name__ == '__main__':
    main()
