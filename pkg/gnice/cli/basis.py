"""Groebner basis commands: gb, ini, nf, spoly, member."""

from typing import Optional

import click

from gnice.cli.common import Workbench, engine_options, gb_option
from gnice.core.groebner import buchberger, ideal_membership, s_polynomial
from gnice.utils.console import Console
from gnice.utils.error_handler import handle_errors


@click.command("gb")
@handle_errors
@click.option("--I", "i_name", default="I", show_default=True, help="Name of the ideal.")
@engine_options
def gb(bench: Workbench, i_name: str) -> None:
    """Reduced Groebner basis of an ideal."""
    with Console.ongoing_status(f"Computing a Groebner basis of {i_name}"):
        basis = buchberger(bench.session.ideal(i_name), bench.order, bench.limits)
    report = bench.report("gb")
    report.equation(f"G({i_name})", report.basis(basis))
    report.add("normalization", "monic, reduced")
    report.emit()


@click.command("ini")
@handle_errors
@click.option("--I", "i_name", default="I", show_default=True, help="Name of the ideal.")
@engine_options
def ini(bench: Workbench, i_name: str) -> None:
    """Initial ideal, by its minimal monomial generators."""
    basis = buchberger(bench.session.ideal(i_name), bench.order, bench.limits)
    report = bench.report("ini")
    report.equation(f"ini({i_name})", report.ideal(basis.initial_ideal()))
    report.emit()


@click.command("nf")
@handle_errors
@click.option("--f", "f_ref", required=True, help="Session polynomial name or inline polynomial.")
@click.option("--I", "i_name", default="J", show_default=True, help="Reduce modulo the reduced basis of this ideal.")
@gb_option
@engine_options
def nf(bench: Workbench, f_ref: str, i_name: str, gb_name: Optional[str]) -> None:
    """Reduced normal form of a polynomial."""
    f = bench.session.polynomial(f_ref)
    basis = bench.session.basis_for(i_name, gb_name, bench.order, bench.limits)
    report = bench.report("nf")
    report.equation("basis", report.basis(basis))
    report.equation(f"NF({report.poly(f)})", report.poly(basis.normal_form(f)))
    report.emit()


@click.command("spoly")
@handle_errors
@click.option("--f", "f_ref", required=True, help="First polynomial (name or inline).")
@click.option("--g", "g_ref", required=True, help="Second polynomial (name or inline).")
@engine_options
def spoly(bench: Workbench, f_ref: str, g_ref: str) -> None:
    """S-polynomial of two polynomials, both made monic first."""
    f, g = bench.session.polynomial(f_ref), bench.session.polynomial(g_ref)
    report = bench.report("spoly")
    report.equation(f"S({report.poly(f)}, {report.poly(g)})", report.poly(s_polynomial(f, g, bench.order)))
    report.emit()


@click.command("member")
@handle_errors
@click.option("--f", "f_ref", required=True, help="Session polynomial name or inline polynomial.")
@click.option("--I", "i_name", default="I", show_default=True, help="Name of the ideal.")
@engine_options
def member(bench: Workbench, f_ref: str, i_name: str) -> None:
    """Ideal membership by reduction to zero."""
    f = bench.session.polynomial(f_ref)
    report = bench.report("member")
    report.add("polynomial", report.poly(f))
    report.verdict(ideal_membership(f, bench.session.ideal(i_name), bench.order, bench.limits))
    report.emit()
