"""G-nice and S-nice commands: is-gnice, is-snice, order-sweep."""

from typing import Optional

import click

from gnice.cli.common import Workbench, e_option, engine_options, gb_option, j_option
from gnice.core.constants import Condition, GniceMode
from gnice.core.niceness import is_gnice, is_gnice_all_orders_hint, snice_witness
from gnice.utils.console import Console
from gnice.utils.error_handler import handle_errors
from gnice.utils.report import verdict


@click.command("is-gnice")
@handle_errors
@j_option
@e_option
@click.option(
    "--mode",
    type=click.Choice([m.value for m in GniceMode]),
    default=GniceMode.A.value,
    show_default=True,
    help="Conditions to decide: A (initial ideal of the sum), C (joint basis), D (intersection).",
)
@engine_options
def is_gnice_command(bench: Workbench, j_name: str, e_name: str, mode: str) -> None:
    """Decide whether (J, E) is a G-nice pair for the order."""
    session = bench.session
    result = is_gnice(session.ideal(j_name), session.ideal(e_name), bench.order, GniceMode(mode), bench.limits)
    report = bench.report("is-gnice")
    report.add("mode", mode)
    report.equation(f"ini({j_name})", report.ideal(result.ini_j))
    report.equation(f"ini({e_name})", report.ideal(result.ini_e))
    if result.ini_sum is not None:
        report.equation(f"ini({j_name}+{e_name})", report.ideal(result.ini_sum))
    if result.ini_intersection is not None:
        report.equation(f"ini({j_name} cap {e_name})", report.ideal(result.ini_intersection))
    for condition in Condition:
        if condition in result.conditions:
            report.add(f"condition {condition.value}", verdict(result.conditions[condition]))
    report.verdict(result.verdict, report.element(result.witness) if result.witness is not None else None)
    report.emit()


@click.command("is-snice")
@handle_errors
@j_option
@e_option
@gb_option
@engine_options
def is_snice_command(bench: Workbench, j_name: str, e_name: str, gb_name: Optional[str]) -> None:
    """Decide whether E is S-nice with respect to G_J."""
    session = bench.session
    basis = session.basis_for(j_name, gb_name, bench.order, bench.limits)
    found = snice_witness(session.ideal(e_name), basis, bench.limits)
    report = bench.report("is-snice")
    report.equation("G_J", report.basis(basis))
    witness = None
    if found is not None:
        witness = f"S({report.poly(found.f)}, {report.poly(found.g)}) = {report.poly(found.s)}"
    report.verdict(found is None, witness)
    report.emit()


@click.command("order-sweep")
@handle_errors
@j_option
@e_option
@engine_options
def order_sweep(bench: Workbench, j_name: str, e_name: str) -> None:
    """G-nice verdict under lex and degrevlex for every variable order."""
    session = bench.session
    verdicts = is_gnice_all_orders_hint(session.ideal(j_name), session.ideal(e_name), limits=bench.limits)
    report = bench.report("order-sweep")
    for order, value in verdicts.items():
        report.add(order.describe(session.ring.variables), verdict(value))
    values = set(verdicts.values())
    if len(values) > 1:
        summary = "order dependent"
    elif True in values:
        summary = "G-nice for every tested order"
    else:
        summary = "G-nice for no tested order"
    report.add("summary", summary)
    report.emit()
    Console.warning("Only the listed orders were tested; this is not a verdict for every monomial order.")
