import click

from skewcat.cli.common import FILE, bound_option, bounds_from, emit, handle_errors, output_options
from skewcat.core.io import dump_skew_moncat, load_input, write_json
from skewcat.modules.normalize import normalize
from skewcat.utils.doc_parser import parse_docstring
from skewcat.utils.logger import setup_logger

logger = setup_logger(__name__)

HELP, EPILOG = parse_docstring(normalize.__doc__)
EPILOG += """

[EXAMPLE]
The K(A, B) fragment of the Ch2 hom bundle:
    $ skewcat normalize fixture:hom-ch2 --bound 6
Save the category of modules next to the report:
    $ skewcat normalize skew-ch3.json --modcat skew-ch3-I.json --format json
"""


@click.command(name="normalize", help=HELP, epilog=EPILOG)
@click.argument("file", type=FILE)
@click.option(
    "--modcat",
    type=click.Path(dir_okay=False, writable=True),
    help="Write the normalization C^I as a skew-moncat document to PATH"
)
@bound_option
@output_options
def main(file: str, modcat: str, bound: int, fmt: str, out: str):
    with handle_errors():
        kind, value = load_input(file, ["skew-moncat", "hom-bundle"])
        bounds = bounds_from(bound)
        c = value.hom_moncat(bounds).moncat if kind == "hom-bundle" else value
        result = normalize(c, bounds)
        result.report.meta["modules"] = len(result.modules)
        if modcat:
            write_json(dump_skew_moncat(result.modcat), modcat)
            logger.info(f"Category of modules written to {modcat}")
    emit(result.report, fmt, out, [file])


if __name__ == '__main__':
    main()
