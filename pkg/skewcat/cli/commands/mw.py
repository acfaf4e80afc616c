import click

from skewcat.cli.common import FILE, bound_option, bounds_from, emit, emit_document, handle_errors, output_options
from skewcat.core.io import dump, dump_category, dump_monad, dump_mw_monad, encode, load_input
from skewcat.core.report import label
from skewcat.modules.mwmonads import (check_mw_algebra, check_mw_monad, enumerate_monads, enumerate_mw,
                                      enumerate_mw_algebras, kleisli_mw, monad_to_mw, mw_to_monad)
from skewcat.utils.logger import setup_logger

logger = setup_logger(__name__)

HELP = "Monads in no-iteration form: check, convert, build Kleisli categories, enumerate."
EPILOG = """
[WORKFLOW]
check      : extension and unit equations of an mw-monad
to-monad   : the monad (D, m, K) of an mw-monad
from-monad : the mw-monad of an ordinary monad
kleisli    : the Kleisli category of an mw-monad
enumerate  : every mw-monad (or monad) on a category
algebra    : the two algebra equations of an mw-algebra
algebras   : every mw-algebra of an mw-monad

[EXAMPLE]
The four closure operators on Ch3:
    $ skewcat mw enumerate fixture:ch3
Kleisli category as JSON:
    $ skewcat mw kleisli fixture:mw-ch3-top --format json
"""


@click.group(name="mw", help=HELP, epilog=EPILOG)
def main():
    pass


@main.command(name="check", help="Check the three mw-monad equations.")
@click.argument("file", type=FILE)
@output_options
def check(file: str, fmt: str, out: str):
    with handle_errors():
        _, t = load_input(file, ["mw-monad"])
        report = check_mw_monad(t)
    emit(report, fmt, out, [file])


@main.command(name="to-monad", help="Convert an mw-monad to a monad.")
@click.argument("file", type=FILE)
@output_options
def to_monad(file: str, fmt: str, out: str):
    with handle_errors():
        _, t = load_input(file, ["mw-monad"])
        m = mw_to_monad(t)
        summary = "\n".join(f"D({label(x)}) = {label(m.D.ob(x))}" for x in m.base.objects)
        emit_document(dump_monad(m), fmt, out, summary)


@main.command(name="from-monad", help="Convert a monad to an mw-monad.")
@click.argument("file", type=FILE)
@output_options
def from_monad(file: str, fmt: str, out: str):
    with handle_errors():
        _, m = load_input(file, ["monad"])
        t = monad_to_mw(m)
        emit_document(dump_mw_monad(t), fmt, out, f"{t.name}: {len(t.T)} extension entries")


@main.command(name="kleisli", help="Build the Kleisli category of an mw-monad.")
@click.argument("file", type=FILE)
@output_options
def kleisli(file: str, fmt: str, out: str):
    with handle_errors():
        _, t = load_input(file, ["mw-monad"])
        c = kleisli_mw(t)
        emit_document(dump_category(c), fmt, out,
                      f"{c.name}: {len(c.objects)} objects, {len(c.morphisms)} morphisms")


@main.command(name="enumerate", help="List every mw-monad on a category.")
@click.argument("file", type=FILE)
@click.option(
    "--classical",
    is_flag=True,
    help="Enumerate ordinary monads instead"
)
@bound_option
@output_options
def enumerate_(file: str, classical: bool, bound: int, fmt: str, out: str):
    with handle_errors():
        _, c = load_input(file, ["category"])
        found = (enumerate_monads if classical else enumerate_mw)(c, bounds_from(bound))
        what = "monads" if classical else "mw-monads"
        lines = [f"{len(found)} {what} on {c.name}"]
        for t in found:
            D = t.D.obj_map if classical else t.D
            lines.append("  D: " + ", ".join(f"{label(x)}->{label(D[x])}" for x in c.objects))
        doc = {"kind": f"{'monad' if classical else 'mw-monad'}-list", "count": len(found),
               "items": [dump(t) for t in found]}
        emit_document(doc, fmt, out, "\n".join(lines))


@main.command(name="algebra", help="Check the two mw-algebra equations.")
@click.argument("file", type=FILE)
@output_options
def algebra(file: str, fmt: str, out: str):
    with handle_errors():
        _, a = load_input(file, ["mw-algebra"])
        report = check_mw_algebra(a)
    emit(report, fmt, out, [file])


@main.command(name="algebras", help="List every mw-algebra of an mw-monad.")
@click.argument("file", type=FILE)
@bound_option
@output_options
def algebras(file: str, bound: int, fmt: str, out: str):
    with handle_errors():
        _, t = load_input(file, ["mw-monad"])
        found = enumerate_mw_algebras(t, bounds_from(bound))
        lines = [f"{len(found)} mw-algebras of {t.name}"]
        lines += [f"  carrier {label(a.carrier)}" for a in found]
        doc = {"kind": "mw-algebra-list", "count": len(found),
               "items": [{"carrier": encode(a.carrier),
                          "E": [[encode(f), encode(e)] for f, e in a.E.items()]} for a in found]}
        emit_document(doc, fmt, out, "\n".join(lines))


if __name__ == '__main__':
    main()
