import importlib
import pkgutil
from textwrap import dedent
from typing import Dict

import click

from . import __version__
from .cli import commands as _commands_pkg
from .utils.logger import set_verbosity

_commands: Dict[str, click.Command] = {}


def _load_commands() -> Dict[str, click.Command]:
    if not _commands:
        for info in pkgutil.iter_modules(_commands_pkg.__path__):
            mod = importlib.import_module(f"{_commands_pkg.__name__}.{info.name}")
            main = getattr(mod, "main", None)
            if isinstance(main, click.Command):
                _keep_epilog_layout(main)
                _commands[main.name] = main
    return _commands


def _format_raw_epilog(self, ctx, formatter):
    if not self.epilog:
        return
    formatter.write_paragraph()
    indent, formatter.current_indent = formatter.current_indent, 0
    formatter.write(dedent(self.epilog).lstrip("\n") + "\n")
    formatter.current_indent = indent


def _keep_epilog_layout(command: click.Command) -> None:
    """Print [EXAMPLE] and [RAISES] sections as written instead of rewrapped."""
    command.format_epilog = _format_raw_epilog.__get__(command, type(command))
    for sub in getattr(command, "commands", {}).values():
        _keep_epilog_layout(sub)


class DynamicCommands(click.MultiCommand):
    def list_commands(self, ctx):
        return sorted(_load_commands())

    def get_command(self, ctx, name):
        return _load_commands().get(name)


@click.group(cls=DynamicCommands)
@click.version_option(__version__, prog_name="skewcat")
@click.option("-v", "--verbose", count=True, help="More log output on stderr (repeatable)")
@click.option("-q", "--quiet", is_flag=True, help="Log warnings and errors only")
def cli(verbose: int, quiet: bool):
    """
    Finite checkers for skew monoidal categories, skew warpings and normalization.

    Any FILE argument also accepts fixture:NAME (see `skewcat fixtures list`).
    """
    set_verbosity(-1 if quiet else verbose)


if __name__ == "__main__":
    cli()
