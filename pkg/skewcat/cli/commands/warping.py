import click

from skewcat.cli.common import FILE, emit, emit_document, handle_errors, output_options
from skewcat.core.io import dump_skew_bicat, load_input
from skewcat.modules.warpings import axiom_trace, check_redundancy_warping, check_skew_warping, kleisli_warping
from skewcat.utils.logger import setup_logger

logger = setup_logger(__name__)

HELP = "Skew warpings: check, build B_T, trace axioms, test redundancy."
EPILOG = """
[WORKFLOW]
check      : structure, naturality of v and k, and the five warping axioms
kleisli    : the skew bicategory B_T with composite M(Tg, f)
trace      : axiom n of B and of the warping against axiom n of B_T
redundancy : axioms 3-5 on a bicategory, given axioms 1-2

[EXAMPLE]
    $ skewcat warping check fixture:identity-warping-z2
    $ skewcat warping kleisli fixture:identity-warping-z2 --format json -o bt.json
"""


@click.group(name="warping", help=HELP, epilog=EPILOG)
def main():
    pass


@main.command(name="check", help="Check a skew warping.")
@click.argument("file", type=FILE)
@click.option(
    "--axiom", "axioms",
    type=click.IntRange(1, 5),
    multiple=True,
    help="Check only these axioms (repeatable)"
)
@output_options
def check(file: str, axioms, fmt: str, out: str):
    with handle_errors():
        _, w = load_input(file, ["warping"])
        report = check_skew_warping(w, axioms=axioms or (1, 2, 3, 4, 5))
    emit(report, fmt, out, [file])


@main.command(name="kleisli", help="Build the Kleisli skew bicategory B_T.")
@click.argument("file", type=FILE)
@output_options
def kleisli(file: str, fmt: str, out: str):
    with handle_errors():
        _, w = load_input(file, ["warping"])
        b = kleisli_warping(w)
        emit_document(dump_skew_bicat(b), fmt, out,
                      f"{b.name}: {len(b.cells0)} 0-cells, {len(b.one_cells())} 1-cells, "
                      f"{len(b.two_cells())} 2-cells")


@main.command(name="trace", help="Trace which axioms of B_T follow from which inputs.")
@click.argument("file", type=FILE)
@output_options
def trace(file: str, fmt: str, out: str):
    with handle_errors():
        _, w = load_input(file, ["warping"])
        report = axiom_trace(w)
    emit(report, fmt, out, [file])


@main.command(name="redundancy", help="Derive axioms 3-5 from axioms 1-2.")
@click.argument("file", type=FILE)
@output_options
def redundancy(file: str, fmt: str, out: str):
    with handle_errors():
        _, w = load_input(file, ["warping"])
        report = check_redundancy_warping(w)
    emit(report, fmt, out, [file])


if __name__ == '__main__':
    main()
