"""Closure commands: hat, tilde, sharp, nf-ideal."""

from typing import Optional

import click

from gnice.cli.common import Workbench, e_option, engine_options, gb_option, j_option
from gnice.core.closures import hat_closure, nf_ideal, sharp_closure, tilde_closure
from gnice.utils.error_handler import handle_errors
from gnice.utils.report import verdict


@click.command("hat")
@handle_errors
@j_option
@e_option
@engine_options
def hat(bench: Workbench, j_name: str, e_name: str) -> None:
    """G-nice monomial closure of a monomial ideal E."""
    session = bench.session
    e = session.monomial_ideal(e_name, bench.order, bench.limits)
    closure, trace = hat_closure(session.ideal(j_name), e, bench.order, bench.limits)
    report = bench.report("hat")
    report.trace("E", trace)
    report.add("sum preserved", verdict(bool(trace.sum_preserved)))
    report.equation("E_hat", report.ideal(closure))
    report.emit()


@click.command("tilde")
@handle_errors
@j_option
@e_option
@gb_option
@engine_options
def tilde(bench: Workbench, j_name: str, e_name: str, gb_name: Optional[str]) -> None:
    """S-nice closure of E with respect to G_J."""
    session = bench.session
    basis = session.basis_for(j_name, gb_name, bench.order, bench.limits)
    closure, trace = tilde_closure(basis, session.ideal(e_name), bench.limits)
    report = bench.report("tilde")
    report.equation("G_J", report.basis(basis))
    report.trace("E", trace)
    report.equation("E_tilde", report.ideal(closure))
    report.emit()


@click.command("sharp")
@handle_errors
@j_option
@e_option
@gb_option
@engine_options
def sharp(bench: Workbench, j_name: str, e_name: str, gb_name: Optional[str]) -> None:
    """S-nice monomial closure of a monomial ideal E with respect to G_J."""
    session = bench.session
    basis = session.basis_for(j_name, gb_name, bench.order, bench.limits)
    e = session.monomial_ideal(e_name, bench.order, bench.limits)
    closure, trace = sharp_closure(basis, e, bench.limits)
    report = bench.report("sharp")
    report.equation("G_J", report.basis(basis))
    report.trace("F", trace)
    report.equation("E_sharp", report.ideal(closure))
    report.emit()


@click.command("nf-ideal")
@handle_errors
@j_option
@e_option
@gb_option
@engine_options
def nf_ideal_command(bench: Workbench, j_name: str, e_name: str, gb_name: Optional[str]) -> None:
    """The ideal NF(E | G_J) generated by reduced normal forms."""
    session = bench.session
    basis = session.basis_for(j_name, gb_name, bench.order, bench.limits)
    result = nf_ideal(basis, session.ideal(e_name), bench.limits)
    report = bench.report("nf-ideal")
    report.equation("G_J", report.basis(basis))
    report.equation(f"NF({e_name})", report.ideal(result))
    report.emit()
