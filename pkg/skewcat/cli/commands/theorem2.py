import click

from skewcat.cli.common import FILE, bound_option, bounds_from, emit, handle_errors, output_options
from skewcat.core.io import load_input, read_json, read_profunctor_list
from skewcat.modules.normalize import theorem2_instance
from skewcat.utils.doc_parser import parse_docstring
from skewcat.utils.errors import FormatError
from skewcat.utils.logger import setup_logger

logger = setup_logger(__name__)

HELP, EPILOG = parse_docstring(theorem2_instance.__doc__)
EPILOG += """

[EXAMPLE]
From a hom bundle:
    $ skewcat theorem2 --bundle fixture:hom-ch3
From separate files (profunctor-list documents or bare JSON arrays):
    $ skewcat theorem2 --base ch2.json --endo endo.json --hom hom.json --format json
"""


@click.command(name="theorem2", help=HELP, epilog=EPILOG)
@click.option(
    "--bundle",
    type=FILE,
    help="Hom bundle holding the base and both lists"
)
@click.option(
    "--base",
    type=FILE,
    help="Category B"
)
@click.option(
    "--endo",
    type=click.Path(exists=True, dir_okay=False),
    help="Profunctors B -|-> B"
)
@click.option(
    "--hom",
    type=click.Path(exists=True, dir_okay=False),
    help="Profunctors ob(B) -|-> B"
)
@bound_option
@output_options
def main(bundle: str, base: str, endo: str, hom: str, bound: int, fmt: str, out: str):
    with handle_errors():
        if bundle:
            _, value = load_input(bundle, ["hom-bundle"])
            B, endo_list, hom_list = value.B, list(value.endo), list(value.hom)
            sources = [bundle]
        elif base:
            _, B = load_input(base, ["category"])
            endo_list = read_profunctor_list(read_json(endo), B, endo=True) if endo else []
            hom_list = read_profunctor_list(read_json(hom), B, endo=False) if hom else []
            sources = [s for s in (base, endo, hom) if s]
        else:
            raise FormatError("give --bundle, or --base with --endo and --hom")
        report = theorem2_instance(B, endo_list, hom_list, bounds_from(bound))
    emit(report, fmt, out, sources)


if __name__ == '__main__':
    main()
