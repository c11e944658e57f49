import importlib.metadata
import logging

import click
from rich.console import Console as RichConsole
from rich.logging import RichHandler

from gnice.cli.basis import gb, ini, member, nf, spoly
from gnice.cli.closures import hat, nf_ideal_command, sharp, tilde
from gnice.cli.ideals import colon, intersect
from gnice.cli.lattice import (
    binomial_family,
    distrib,
    distrib_dual,
    family_intersect,
    regseq,
    snice_distrib,
    snice_sum,
    sum_split,
)
from gnice.cli.pairs import is_gnice_command, is_snice_command, order_sweep
from gnice.utils.help import RecursiveHelpGroup


def _enable_debug_logging() -> None:
    logging.basicConfig(
        level=logging.DEBUG,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=RichConsole(stderr=True), show_path=False)],
        force=True,
    )


@click.group(invoke_without_command=True)
@click.option("-v", "--version", "show_version", is_flag=True, help="Show version and exit")
@click.option("--commands", is_flag=True, help="Show available commands and exit")
@click.option("--verbose", is_flag=True, help="Log engine progress to stderr")
@click.pass_context
def cli(ctx: click.Context, show_version: bool, commands: bool, verbose: bool) -> None:
    """
    gnice: Groebner bases, G-nice and S-nice pairs of polynomial ideals.
    """
    if verbose:
        _enable_debug_logging()
    if show_version:
        click.echo(f"gnice {importlib.metadata.version('gnice')}")
        ctx.exit(0)
    elif commands:
        original_cls = cli.__class__
        try:
            cli.__class__ = RecursiveHelpGroup
            click.echo(cli.get_help(ctx))
        finally:
            cli.__class__ = original_cls
        ctx.exit(0)
    elif ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())
        ctx.exit(0)


# Groebner bases and ideal operations
cli.add_command(gb)
cli.add_command(ini)
cli.add_command(nf)
cli.add_command(spoly)
cli.add_command(member)
cli.add_command(intersect)
cli.add_command(colon)

# pairs and closures
cli.add_command(is_gnice_command)
cli.add_command(is_snice_command)
cli.add_command(order_sweep)
cli.add_command(hat)
cli.add_command(tilde)
cli.add_command(sharp)
cli.add_command(nf_ideal_command)

# lattice
cli.add_command(regseq)
cli.add_command(distrib)
cli.add_command(distrib_dual)
cli.add_command(family_intersect)
cli.add_command(sum_split)
cli.add_command(binomial_family)
cli.add_command(snice_distrib)
cli.add_command(snice_sum)

if __name__ == "__main__":
    try:
        cli(standalone_mode=False)
    except click.Abort:
        click.echo("\nOperation aborted by user.", err=True)
    except click.ClickException as e:
        e.show()
