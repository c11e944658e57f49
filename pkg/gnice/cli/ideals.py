"""Ideal operations: intersect, colon."""

import click

from gnice.cli.common import Workbench, engine_options, j_option
from gnice.core.groebner import ideal_equal, initial_ideal
from gnice.core.ideal_algebra import ideal_colon, ideal_intersection
from gnice.utils.error_handler import handle_errors


@click.command("intersect")
@handle_errors
@click.option("--I", "i_name", default="I", show_default=True, help="Name of the first ideal.")
@j_option
@engine_options
def intersect(bench: Workbench, i_name: str, j_name: str) -> None:
    """Intersection of two ideals by elimination."""
    session = bench.session
    meet = ideal_intersection(session.ideal(i_name), session.ideal(j_name), bench.order, bench.limits)
    report = bench.report("intersect")
    report.equation(f"{i_name} cap {j_name}", report.ideal(meet))
    report.equation(f"ini({i_name} cap {j_name})", report.ideal(initial_ideal(meet, bench.order, bench.limits)))
    report.emit()


@click.command("colon")
@handle_errors
@j_option
@click.option("--f", "f_ref", required=True, help="Session polynomial name or inline polynomial.")
@engine_options
def colon(bench: Workbench, j_name: str, f_ref: str) -> None:
    """Colon ideal (J : f), and whether f is regular on S/J."""
    j = bench.session.ideal(j_name)
    f = bench.session.polynomial(f_ref)
    quotient = ideal_colon(j, f, bench.order, bench.limits)
    report = bench.report("colon")
    report.equation(f"({j_name} : {report.poly(f)})", report.ideal(quotient))
    report.verdict(ideal_equal(quotient, j, bench.order, bench.limits), label="regular")
    report.emit()
