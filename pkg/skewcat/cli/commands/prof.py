import click

from skewcat.cli.common import FILE, bound_option, bounds_from, emit, emit_document, handle_errors, output_options
from skewcat.core.io import dump_profunctor, dump_skew_moncat, load_input
from skewcat.core.report import label
from skewcat.modules.profhom import check_hom_structure, check_prof, monoid_dictionary, prof_compose, u_functor
from skewcat.modules.skewstruct import check_monoidal_functor, check_skew_moncat
from skewcat.utils.logger import setup_logger

logger = setup_logger(__name__)

HELP = "Finite profunctors and the hom skew monoidal categories K(A, B)."
EPILOG = """
[WORKFLOW]
compose : coend composite G o F of two profunctors
homcat  : the fragment of K(A, B) generated by a hom bundle, checked; with
          --values sets the axioms are checked element by element on the
          generators, since set-valued K(A, B) only closes up for discrete B
u       : restriction u: K(B, B) -> K(A, B) as a monoidal functor
monoids : monoids of K(A, B) against the mw-monads on B

[EXAMPLE]
    $ skewcat prof homcat fixture:hom-ch3
    $ skewcat prof homcat fixture:hom-ch2 --values sets
    $ skewcat prof monoids fixture:hom-ch3 --format json
    $ skewcat prof compose g.json f.json -o gf.json
"""


@click.group(name="prof", help=HELP, epilog=EPILOG)
def main():
    pass


@main.command(name="compose", help="Compose two profunctors, G after F.")
@click.argument("g_file", metavar="G", type=FILE)
@click.argument("f_file", metavar="F", type=FILE)
@output_options
def compose(g_file: str, f_file: str, fmt: str, out: str):
    with handle_errors():
        _, g = load_input(g_file, ["profunctor"])
        _, f = load_input(f_file, ["profunctor"])
        for P in (f, g):
            checked = check_prof(P)
            if not checked.ok:
                emit(checked, fmt, out, [g_file, f_file])
        gf = prof_compose(g, f)
        summary = "\n".join(f"{gf.name}({label(b)}, {label(a)}): {len(gf.values[(b, a)])}"
                            for b, a in gf.cells())
        emit_document(dump_profunctor(gf), fmt, out, summary)


@main.command(name="homcat", help="Build and check the K(A, B) fragment of a hom bundle.")
@click.argument("file", type=FILE)
@click.option(
    "--dump",
    is_flag=True,
    help="Print the skew monoidal category instead of its report"
)
@click.option(
    "--values",
    type=click.Choice(["truth", "sets"]),
    default="truth",
    show_default=True,
    help="Truncate profunctors to truth values, or keep their elements"
)
@bound_option
@output_options
def homcat(file: str, dump: bool, values: str, bound: int, fmt: str, out: str):
    with handle_errors():
        _, bundle = load_input(file, ["hom-bundle"])
        bounds = bounds_from(bound)
        if values == "sets" and not dump:
            report = check_hom_structure(bundle.B, bundle.generators(), bounds)
            report.meta["objects"] = ["i"] + [P.name for P in bundle.generators()]
            emit(report, fmt, out, [file])
            return
        h = bundle.hom_moncat(bounds, values=values)
        if dump:
            names = ", ".join(sorted(h.relations))
            emit_document(dump_skew_moncat(h.moncat), fmt, out, f"{h.moncat.name}: {names}")
            return
        report = check_skew_moncat(h.moncat)
        report.meta["objects"] = sorted(h.relations)
    emit(report, fmt, out, [file])


@main.command(name="u", help="Check u: K(B, B) -> K(A, B) as a monoidal functor.")
@click.argument("file", type=FILE)
@bound_option
@output_options
def u(file: str, bound: int, fmt: str, out: str):
    with handle_errors():
        _, bundle = load_input(file, ["hom-bundle"])
        bounds = bounds_from(bound)
        functor = u_functor(bundle.endo_moncat(bounds), bundle.hom_moncat(bounds), bounds)
        report = check_monoidal_functor(functor)
    emit(report, fmt, out, [file])


@main.command(name="monoids", help="Match monoids of K(A, B) with mw-monads on B.")
@click.argument("file", type=FILE)
@bound_option
@output_options
def monoids(file: str, bound: int, fmt: str, out: str):
    with handle_errors():
        _, bundle = load_input(file, ["hom-bundle"])
        bounds = bounds_from(bound)
        report = monoid_dictionary(bundle.hom_moncat(bounds), bounds)
    emit(report, fmt, out, [file])


if __name__ == '__main__':
    main()
