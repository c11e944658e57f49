"""G-nice and S-nice predicates.

A pair (J, E) is G-nice for an order when ini(J+E) = ini(J) + ini(E). The
equivalent conditions decided here are

* A: ini(J+E) = ini(J) + ini(E)
* C: the union of Groebner bases of J and E is a Groebner basis of J+E
* D: ini(J cap E) = ini(J) cap ini(E)

and any two of them that are computed must agree.
"""

import itertools
import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Optional, Union

from gnice.core.config import settings
from gnice.core.constants import Condition, GniceMode
from gnice.core.groebner import GroebnerBasis, criterion_witness, groebner_basis, s_polynomial
from gnice.core.ideal import Ideal, MonomialIdeal
from gnice.core.ideal_algebra import ideal_intersection
from gnice.core.limits import EngineLimits
from gnice.core.monomial import Exponents, MonomialOrder
from gnice.core.polynomial import Polynomial
from gnice.exceptions import InvariantViolation, ResourceLimitError

logger = logging.getLogger(__name__)

Witness = Union[Exponents, Polynomial]


@dataclass
class NicenessReport:
    verdict: bool
    conditions: dict[Condition, bool]
    order: MonomialOrder
    witness: Optional[Witness] = None
    ini_j: Optional[MonomialIdeal] = None
    ini_e: Optional[MonomialIdeal] = None
    ini_sum: Optional[MonomialIdeal] = None
    ini_intersection: Optional[MonomialIdeal] = None


def _first(monomials: Sequence[Exponents], order: MonomialOrder) -> Optional[Exponents]:
    return min(monomials, key=order.display_key) if monomials else None


def is_gnice(
    j: Ideal,
    e: Ideal,
    order: Optional[MonomialOrder] = None,
    mode: GniceMode = GniceMode.A,
    limits: Optional[EngineLimits] = None,
) -> NicenessReport:
    """Decide whether (J, E) is G-nice using the conditions selected by `mode`.

    The witness of a failing pair is the least minimal generator of ini(J+E)
    outside ini(J) + ini(E) (condition A), the least minimal generator of
    ini(J) cap ini(E) outside ini(J cap E) (condition D), or a nonzero reduced
    S-polynomial of the joint basis (condition C).
    """
    j.ring.check_same(e.ring)
    order = order or MonomialOrder.degrevlex(j.ring.arity)
    gb_j = groebner_basis(j, order, limits)
    gb_e = groebner_basis(e, order, limits)
    ini_j, ini_e = gb_j.initial_ideal(), gb_e.initial_ideal()
    report = NicenessReport(verdict=True, conditions={}, order=order, ini_j=ini_j, ini_e=ini_e)

    witnesses: dict[Condition, Optional[Witness]] = {}
    for condition in mode.conditions:
        if condition is Condition.A:
            report.ini_sum = groebner_basis(j + e, order, limits).initial_ideal()
            witnesses[condition] = _first(report.ini_sum.missing_from(ini_j + ini_e), order)
        elif condition is Condition.C:
            witnesses[condition] = criterion_witness(gb_j.generators + gb_e.generators, order)
        else:
            meet = ideal_intersection(j, e, order, limits)
            report.ini_intersection = MonomialIdeal.of(j.ring, (g.leading_monomial(order) for g in meet))
            witnesses[condition] = _first(ini_j.intersection(ini_e).missing_from(report.ini_intersection), order)
        report.conditions[condition] = witnesses[condition] is None

    if len(set(report.conditions.values())) > 1:
        raise InvariantViolation(f"G-nice conditions disagree: {_describe(report.conditions)}")
    report.verdict = next(iter(report.conditions.values()))
    if not report.verdict:
        report.witness = next(w for w in witnesses.values() if w is not None)
    logger.debug("is_gnice %s: %s", _describe(report.conditions), report.verdict)
    return report


def _describe(conditions: dict[Condition, bool]) -> str:
    return ", ".join(f"{c.value}={v}" for c, v in conditions.items())


def variable_orders(arity: int) -> list[MonomialOrder]:
    """lex and degrevlex over every variable precedence."""
    if arity > settings.MAX_SWEEP_VARIABLES:
        raise ResourceLimitError(
            f"order sweep over {arity} variables exceeds the cap of {settings.MAX_SWEEP_VARIABLES}"
        )
    orders = []
    for perm in itertools.permutations(range(arity)):
        orders.append(MonomialOrder.lex(arity, perm))
        orders.append(MonomialOrder.degrevlex(arity, perm))
    return orders


def is_gnice_all_orders_hint(
    j: Ideal,
    e: Ideal,
    orders: Optional[Sequence[MonomialOrder]] = None,
    limits: Optional[EngineLimits] = None,
) -> dict[MonomialOrder, bool]:
    """G-nice verdicts over a finite list of orders; not a proof for every order."""
    orders = list(orders) if orders is not None else variable_orders(j.ring.arity)
    return {order: is_gnice(j, e, order, GniceMode.A, limits).verdict for order in orders}


@dataclass(frozen=True)
class SniceWitness:
    f: Polynomial
    g: Polynomial
    s: Polynomial = field(compare=False)


def snice_witness(
    e: Ideal, gb_j: GroebnerBasis, limits: Optional[EngineLimits] = None
) -> Optional[SniceWitness]:
    """A pair f in G_J, g in the reduced basis of E with S(f, g) outside E."""
    e.ring.check_same(gb_j.ring)
    gb_e = groebner_basis(e, gb_j.order, limits)
    for f in gb_j:
        for g in gb_e:
            s = s_polynomial(f, g, gb_j.order)
            if not gb_e.contains(s):
                return SniceWitness(f, g, s)
    return None


def is_snice(e: Ideal, gb_j: GroebnerBasis, limits: Optional[EngineLimits] = None) -> bool:
    return snice_witness(e, gb_j, limits) is None
