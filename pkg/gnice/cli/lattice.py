"""Lattice commands: regseq, distrib, distrib-dual, family-intersect, sum-split,
binomial-family, snice-distrib, snice-sum."""

from typing import Any, Callable, Optional

import click

from gnice.cli.common import Workbench, e_option, engine_options, gb_option, j_option
from gnice.core.groebner import groebner_basis
from gnice.core.lattice import (
    DistributivityReport,
    FamilyIntersectionReport,
    binomial_family_intersection,
    distributivity_check,
    dual_distributivity_check,
    gnice_sum_split,
    monomial_family_intersection,
    regular_sequence_transfer,
    snice_distributivity_check,
    snice_family_sum,
)
from gnice.exceptions import InputError
from gnice.utils.error_handler import handle_errors
from gnice.utils.report import Report, verdict


def e2_option(func: Callable[..., Any]) -> Callable[..., Any]:
    return click.option("--E2", "e2_name", default="E2", show_default=True, help="Name of the ideal E'.")(func)


def family_option(func: Callable[..., Any]) -> Callable[..., Any]:
    return click.option(
        "--E", "e_names", multiple=True, required=True, help="Name of a family member; repeat for each."
    )(func)


@click.command("regseq")
@handle_errors
@j_option
@click.option("--f", "f_refs", required=True, help="Comma separated polynomials or names, or an ideal name.")
@engine_options
def regseq(bench: Workbench, j_name: str, f_refs: str) -> None:
    """Transfer of a regular sequence on S/J to its initial terms on S/ini(J)."""
    fs = bench.session.polynomials(f_refs)
    result = regular_sequence_transfer(bench.session.ideal(j_name), fs, bench.order, bench.limits)
    report = bench.report("regseq")
    report.add("sequence", ", ".join(report.poly(f) for f in fs))
    report.add("initial terms", ", ".join(report.monomial(m) for m in result.initial_monomials))
    report.equation(f"ini({j_name})", report.ideal(result.ini_j))
    report.equation(f"ini({j_name},f)", report.ideal(result.ini_total))
    report.add("initial terms regular", verdict(result.transfers))
    report.add("initial ideal splits", verdict(result.gnice_chain))
    report.emit()


def _distributivity_lines(report: Report, result: DistributivityReport, lattice: str, pair: str) -> None:
    report.add(lattice, verdict(result.lattice_equality))
    report.add(pair, verdict(result.pair_gnice))
    report.add("condition a", verdict(result.condition_a))
    report.add("condition b", verdict(result.condition_b))
    report.equation("lhs initial", report.ideal(result.lhs_initial))
    report.equation("rhs initial", report.ideal(result.rhs_initial))
    if result.witness is not None:
        report.add("witness", report.monomial(result.witness))


@click.command("distrib")
@handle_errors
@j_option
@e_option
@e2_option
@engine_options
def distrib(bench: Workbench, j_name: str, e_name: str, e2_name: str) -> None:
    """(J+E) cap (J+E') against J + (E cap E') for G-nice (J,E), (J,E')."""
    session = bench.session
    result = distributivity_check(
        session.ideal(j_name), session.ideal(e_name), session.ideal(e2_name), bench.order, bench.limits
    )
    report = bench.report("distrib")
    report.equation("ini(E cap E')", report.ideal(result.combined))
    _distributivity_lines(report, result, "(J+E) cap (J+E') = J+(E cap E')", "(J, E cap E') G-nice")
    report.emit()


@click.command("distrib-dual")
@handle_errors
@j_option
@e_option
@e2_option
@engine_options
def distrib_dual(bench: Workbench, j_name: str, e_name: str, e2_name: str) -> None:
    """J cap E + J cap E' against J cap (E+E') for G-nice (J,E), (J,E')."""
    session = bench.session
    result = dual_distributivity_check(
        session.ideal(j_name), session.ideal(e_name), session.ideal(e2_name), bench.order, bench.limits
    )
    report = bench.report("distrib-dual")
    report.equation("ini(E+E')", report.ideal(result.combined))
    _distributivity_lines(report, result, "J cap E + J cap E' = J cap (E+E')", "(J, E+E') G-nice")
    report.emit()


def _family_lines(report: Report, result: FamilyIntersectionReport) -> None:
    for index, hat in enumerate(result.hats):
        report.equation(f"E_hat_{index}", report.ideal(hat))
    report.equation("intersection", report.ideal(result.intersection))
    report.add("(J, intersection) G-nice", verdict(result.gnice))
    report.add("intersection of sums = J + intersection", verdict(result.sum_equality))
    report.add("G_J with G(intersection) is a Groebner basis", verdict(result.basis_criterion))
    report.add("(J, sum) G-nice", verdict(result.sum_gnice))


@click.command("family-intersect")
@handle_errors
@j_option
@family_option
@engine_options
def family_intersect(bench: Workbench, j_name: str, e_names: tuple[str, ...]) -> None:
    """Intersection of monomial ideals each G-nice with J."""
    session = bench.session
    es = [session.monomial_ideal(name, bench.order, bench.limits) for name in e_names]
    result = monomial_family_intersection(session.ideal(j_name), es, bench.order, bench.limits)
    report = bench.report("family-intersect")
    _family_lines(report, result)
    report.emit()


@click.command("binomial-family")
@handle_errors
@j_option
@family_option
@engine_options
def binomial_family(bench: Workbench, j_name: str, e_names: tuple[str, ...]) -> None:
    """For binomial J and monomial E_i, intersect the J+E_i through the closures E_hat_i."""
    session = bench.session
    es = [session.monomial_ideal(name, bench.order, bench.limits) for name in e_names]
    result = binomial_family_intersection(session.ideal(j_name), es, bench.order, bench.limits)
    report = bench.report("binomial-family")
    _family_lines(report, result)
    report.emit()


def _parse_subset(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise InputError(f"--X expects comma separated indices, got '{text}'") from None


@click.command("sum-split")
@handle_errors
@family_option
@click.option("--X", "subset", default="", help="Comma separated 0-based indices of the first part.")
@engine_options
def sum_split(bench: Workbench, e_names: tuple[str, ...], subset: str) -> None:
    """Split a pairwise G-nice family into two sums and check the pair is G-nice."""
    session = bench.session
    es = [session.ideal(name) for name in e_names]
    result = gnice_sum_split(es, _parse_subset(subset), bench.order, bench.limits)
    report = bench.report("sum-split")
    report.equation("E_X", report.ideal(result.part))
    report.equation("E_Xc", report.ideal(result.complement))
    report.verdict(result.verdict, report.element(result.witness) if result.witness is not None else None)
    report.emit()


@click.command("snice-distrib")
@handle_errors
@j_option
@e_option
@e2_option
@gb_option
@engine_options
def snice_distrib(bench: Workbench, j_name: str, e_name: str, e2_name: str, gb_name: Optional[str]) -> None:
    """Distributivity for E, E' S-nice with respect to G_J."""
    session = bench.session
    basis = session.basis_for(j_name, gb_name, bench.order, bench.limits)
    result = snice_distributivity_check(
        session.ideal(j_name), session.ideal(e_name), session.ideal(e2_name), basis, bench.limits
    )
    report = bench.report("snice-distrib")
    report.equation("ini(E cap E')", report.ideal(result.combined))
    report.equation("ini((J+E) cap (J+E'))", report.ideal(result.lhs_initial))
    report.add("(J+E) cap (J+E') = J+(E cap E')", verdict(result.lattice_equality))
    report.add("condition b", verdict(result.condition_b))
    report.emit()


@click.command("snice-sum")
@handle_errors
@j_option
@family_option
@gb_option
@engine_options
def snice_sum(bench: Workbench, j_name: str, e_names: tuple[str, ...], gb_name: Optional[str]) -> None:
    """Sum of pairwise G-nice ideals, each S-nice with respect to G_J."""
    session = bench.session
    basis = session.basis_for(j_name, gb_name, bench.order, bench.limits)
    result = snice_family_sum(basis, [session.ideal(name) for name in e_names], bench.limits)
    report = bench.report("snice-sum")
    report.equation("G_J", report.basis(basis))
    report.equation("sum", report.ideal(groebner_basis(result.total, basis.order, bench.limits)))
    report.verdict(result.snice)
    report.emit()
