"""Regular-sequence transfer, distributivity diagnostics and family operations.

Every check evaluates both sides of a proven equivalence independently and
raises `InvariantViolation` when they disagree.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import reduce
from typing import Optional

from gnice.core.closures import hat_closure, sharp_closure
from gnice.core.constants import GniceMode
from gnice.core.groebner import GroebnerBasis, groebner_basis, ideal_equal, satisfies_buchberger_criterion
from gnice.core.ideal import Ideal, MonomialIdeal
from gnice.core.ideal_algebra import (
    first_monomial_zero_divisor,
    ideal_intersection,
    ideal_sum,
    is_binomial_ideal,
    is_regular_element,
)
from gnice.core.limits import EngineLimits, resolve
from gnice.core.monomial import Exponents, MonomialOrder
from gnice.core.niceness import SniceWitness, Witness, is_gnice, snice_witness
from gnice.core.polynomial import Polynomial
from gnice.exceptions import InputError, InvariantViolation, NotGniceError, NotRegularSequenceError, PreconditionError

logger = logging.getLogger(__name__)


def _order(ideal: Ideal, order: Optional[MonomialOrder]) -> MonomialOrder:
    return order or MonomialOrder.degrevlex(ideal.ring.arity)


def _ini(ideal: Ideal, order: MonomialOrder, limits: Optional[EngineLimits]) -> MonomialIdeal:
    return groebner_basis(ideal, order, limits).initial_ideal()


def _require_gnice(j: Ideal, e: Ideal, name: str, order: MonomialOrder, limits: Optional[EngineLimits]) -> None:
    report = is_gnice(j, e, order, GniceMode.A, limits)
    if not report.verdict:
        raise NotGniceError(f"(J, {name}) is not a G-nice pair")


def _first_missing(big: MonomialIdeal, small: MonomialIdeal, order: MonomialOrder) -> Optional[Exponents]:
    missing = big.missing_from(small)
    return min(missing, key=order.display_key) if missing else None


@dataclass
class RegularSequenceReport:
    transfers: bool
    gnice_chain: bool
    initial_monomials: list[Exponents]
    ini_j: MonomialIdeal
    ini_total: MonomialIdeal
    first_zero_divisor: Optional[int] = None


def regular_sequence_transfer(
    j: Ideal, fs: Sequence[Polynomial], order: Optional[MonomialOrder] = None, limits: Optional[EngineLimits] = None
) -> RegularSequenceReport:
    """For a regular sequence f_1..f_r on S/J, compare regularity of ini(f_1)..ini(f_r)
    on S/ini(J) with ini(J, f_1..f_r) = ini(J) + (ini(f_1)..ini(f_r))."""
    order = _order(j, order)
    current = j
    for index, f in enumerate(fs):
        if not f:
            raise NotRegularSequenceError(index, f"not a regular sequence: element {index} is zero")
        if not is_regular_element(f, current, order, limits):
            raise NotRegularSequenceError(index)
        current = current + Ideal(j.ring, [f])

    ini_j = _ini(j, order, limits)
    monomials = [f.leading_monomial(order) for f in fs]
    zero_divisor = first_monomial_zero_divisor(ini_j, monomials)
    ini_total = _ini(current, order, limits)
    report = RegularSequenceReport(
        transfers=zero_divisor is None,
        gnice_chain=ini_total == ini_j + MonomialIdeal.of(j.ring, monomials),
        initial_monomials=monomials,
        ini_j=ini_j,
        ini_total=ini_total,
        first_zero_divisor=zero_divisor,
    )
    if report.transfers != report.gnice_chain:
        raise InvariantViolation(
            f"regular sequence transfer disagrees: monomial regularity {report.transfers}, "
            f"initial ideal equality {report.gnice_chain}"
        )
    return report


@dataclass
class DistributivityReport:
    """Both sides of the distributivity equivalence for J, E, E'.

    For the direct form `lattice_equality` is (J+E) cap (J+E') = J + (E cap E')
    and `pair_gnice` is (J, E cap E') G-nice; for the dual form they are
    J cap E + J cap E' = J cap (E+E') and (J, E+E') G-nice.
    """

    lattice_equality: bool
    pair_gnice: bool
    condition_b: bool
    combined: MonomialIdeal
    lhs_initial: MonomialIdeal
    rhs_initial: MonomialIdeal
    witness: Optional[Exponents] = None

    @property
    def condition_a(self) -> bool:
        return self.lattice_equality and self.pair_gnice


def distributivity_check(
    j: Ideal,
    e: Ideal,
    e2: Ideal,
    order: Optional[MonomialOrder] = None,
    limits: Optional[EngineLimits] = None,
) -> DistributivityReport:
    """(J+E) cap (J+E') = J + (E cap E') with (J, E cap E') G-nice, against
    ini((J+E) cap (J+E')) = ini(J) + ini(E cap E')."""
    order = _order(j, order)
    _require_gnice(j, e, "E", order, limits)
    _require_gnice(j, e2, "E'", order, limits)

    meet = ideal_intersection(e, e2, order, limits)
    big = ideal_intersection(j + e, j + e2, order, limits)
    ini_j = _ini(j, order, limits)
    ini_meet = _ini(meet, order, limits)
    ini_big = _ini(big, order, limits)
    ini_small = _ini(j + meet, order, limits)
    expected = ini_j + ini_meet

    report = DistributivityReport(
        # J + (E cap E') is contained in the intersection
        lattice_equality=ini_big == ini_small,
        pair_gnice=ini_small == expected,
        condition_b=ini_big == expected,
        combined=ini_meet,
        lhs_initial=ini_big,
        rhs_initial=ini_small,
        witness=_first_missing(ini_big, ini_small, order),
    )
    if report.condition_a != report.condition_b:
        raise InvariantViolation("distributivity conditions (a) and (b) disagree")
    logger.debug("distributivity: lattice=%s pair=%s", report.lattice_equality, report.pair_gnice)
    return report


def dual_distributivity_check(
    j: Ideal,
    e: Ideal,
    e2: Ideal,
    order: Optional[MonomialOrder] = None,
    limits: Optional[EngineLimits] = None,
) -> DistributivityReport:
    """J cap E + J cap E' = J cap (E+E') with (J, E+E') G-nice, against
    ini(J cap E + J cap E') = ini(J) cap ini(E+E')."""
    order = _order(j, order)
    _require_gnice(j, e, "E", order, limits)
    _require_gnice(j, e2, "E'", order, limits)

    joined = e + e2
    lhs = ideal_intersection(j, e, order, limits) + ideal_intersection(j, e2, order, limits)
    rhs = ideal_intersection(j, joined, order, limits)
    ini_j = _ini(j, order, limits)
    ini_joined = _ini(joined, order, limits)
    ini_lhs = _ini(lhs, order, limits)
    ini_rhs = _ini(rhs, order, limits)
    expected = ini_j.intersection(ini_joined)

    report = DistributivityReport(
        lattice_equality=ini_lhs == ini_rhs,
        pair_gnice=_ini(j + joined, order, limits) == ini_j + ini_joined,
        condition_b=ini_lhs == expected,
        combined=ini_joined,
        lhs_initial=ini_lhs,
        rhs_initial=ini_rhs,
        witness=_first_missing(ini_rhs, ini_lhs, order),
    )
    if report.condition_a != report.condition_b:
        raise InvariantViolation("dual distributivity conditions (a) and (b) disagree")
    return report


@dataclass
class FamilyIntersectionReport:
    intersection: MonomialIdeal
    gnice: bool
    sum_equality: bool
    basis_criterion: bool
    # (J, sum of E_i) G-nice
    sum_gnice: bool
    hats: list[MonomialIdeal] = field(default_factory=list)


def _family_sum_gnice(
    j: Ideal, es: Sequence[MonomialIdeal], order: MonomialOrder, limits: Optional[EngineLimits]
) -> bool:
    total = reduce(MonomialIdeal.__add__, es)
    return is_gnice(j, total.to_ideal(), order, GniceMode.A, limits).verdict


def monomial_family_intersection(
    j: Ideal,
    es: Sequence[MonomialIdeal],
    order: Optional[MonomialOrder] = None,
    limits: Optional[EngineLimits] = None,
) -> FamilyIntersectionReport:
    """For monomial E_i each G-nice with J: (J, cap E_i) is G-nice, cap (J+E_i) = J + cap E_i,
    G_J together with G(cap E_i) is a Groebner basis, and (J, sum E_i) is G-nice."""
    if not es:
        raise InputError("family of monomial ideals is empty")
    order = _order(j, order)
    for index, e in enumerate(es):
        _require_gnice(j, e.to_ideal(), f"E_{index}", order, limits)

    meet = reduce(MonomialIdeal.intersection, es)
    meet_ideal = meet.to_ideal()
    sums = reduce(lambda a, b: ideal_intersection(a, b, order, limits), (j + e.to_ideal() for e in es))
    gb_j = groebner_basis(j, order, limits)
    report = FamilyIntersectionReport(
        intersection=meet,
        gnice=is_gnice(j, meet_ideal, order, GniceMode.A, limits).verdict,
        sum_equality=ideal_equal(sums, j + meet_ideal, order, limits),
        basis_criterion=satisfies_buchberger_criterion(gb_j.generators + meet_ideal.generators, order),
        sum_gnice=_family_sum_gnice(j, es, order, limits),
    )
    if not (report.gnice and report.sum_equality and report.basis_criterion and report.sum_gnice):
        raise InvariantViolation(
            f"monomial family intersection: gnice={report.gnice}, sum_equality={report.sum_equality}, "
            f"basis_criterion={report.basis_criterion}, sum_gnice={report.sum_gnice}"
        )
    return report


def binomial_family_intersection(
    j: Ideal,
    es: Sequence[MonomialIdeal],
    order: Optional[MonomialOrder] = None,
    limits: Optional[EngineLimits] = None,
) -> FamilyIntersectionReport:
    """For binomial J and monomial E_i: cap (J+E_i) = J + cap E_hat_i."""
    if not es:
        raise InputError("family of monomial ideals is empty")
    order = _order(j, order)
    if not is_binomial_ideal(j, order, limits):
        raise PreconditionError("J is not a binomial ideal")

    hats = [hat_closure(j, e, order, limits)[0] for e in es]
    meet = reduce(MonomialIdeal.intersection, hats)
    meet_ideal = meet.to_ideal()
    sums = reduce(lambda a, b: ideal_intersection(a, b, order, limits), (j + e.to_ideal() for e in es))
    gb_j = groebner_basis(j, order, limits)
    report = FamilyIntersectionReport(
        intersection=meet,
        gnice=is_gnice(j, meet_ideal, order, GniceMode.A, limits).verdict,
        sum_equality=ideal_equal(sums, j + meet_ideal, order, limits),
        basis_criterion=satisfies_buchberger_criterion(gb_j.generators + meet_ideal.generators, order),
        sum_gnice=_family_sum_gnice(j, hats, order, limits),
        hats=hats,
    )
    if not (report.gnice and report.sum_equality and report.sum_gnice):
        raise InvariantViolation(
            f"binomial family intersection: gnice={report.gnice}, sum_equality={report.sum_equality}, "
            f"sum_gnice={report.sum_gnice}"
        )
    return report


@dataclass
class SumSplitReport:
    verdict: bool
    part: Ideal
    complement: Ideal
    witness: Optional[Witness] = None


def gnice_sum_split(
    es: Sequence[Ideal],
    subset: Sequence[int],
    order: Optional[MonomialOrder] = None,
    limits: Optional[EngineLimits] = None,
) -> SumSplitReport:
    """For pairwise G-nice E_1..E_m and X a subset of indices, (E_X, E_{X^c}) is G-nice."""
    if not es:
        raise InputError("family of ideals is empty")
    ring = es[0].ring
    order = order or MonomialOrder.degrevlex(ring.arity)
    chosen = set(subset)
    if not chosen <= set(range(len(es))):
        raise InputError(f"index subset {sorted(chosen)} outside 0..{len(es) - 1}")

    for a in range(len(es)):
        for b in range(a + 1, len(es)):
            if not is_gnice(es[a], es[b], order, GniceMode.A, limits).verdict:
                raise NotGniceError(f"(E_{a}, E_{b}) is not a G-nice pair")

    part = reduce(ideal_sum, (es[i] for i in sorted(chosen)), Ideal(ring))
    complement = reduce(ideal_sum, (e for i, e in enumerate(es) if i not in chosen), Ideal(ring))
    result = is_gnice(part, complement, order, GniceMode.A, limits)
    report = SumSplitReport(result.verdict, part, complement, result.witness)
    if not report.verdict:
        raise InvariantViolation("sum of pairwise G-nice ideals split into a non G-nice pair")
    return report


@dataclass
class SniceDistributivityReport:
    lattice_equality: bool
    condition_b: bool
    combined: MonomialIdeal
    lhs_initial: MonomialIdeal


def snice_distributivity_check(
    j: Ideal, e: Ideal, e2: Ideal, gb_j: Optional[GroebnerBasis] = None, limits: Optional[EngineLimits] = None
) -> SniceDistributivityReport:
    """For E, E' S-nice with respect to G_J:
    (J+E) cap (J+E') = J + (E cap E')  iff  ini((J+E) cap (J+E')) = ini(J) + ini(E cap E')."""
    limits = resolve(limits)
    if gb_j is None:
        gb_j = groebner_basis(j, MonomialOrder.degrevlex(j.ring.arity), limits)
    order = gb_j.order
    for name, ideal in (("E", e), ("E'", e2)):
        if snice_witness(ideal, gb_j, limits) is not None:
            raise PreconditionError(f"{name} is not S-nice with respect to G_J")

    meet = ideal_intersection(e, e2, order, limits)
    big = ideal_intersection(j + e, j + e2, order, limits)
    ini_big = _ini(big, order, limits)
    ini_meet = _ini(meet, order, limits)
    report = SniceDistributivityReport(
        lattice_equality=ideal_equal(big, j + meet, order, limits),
        condition_b=ini_big == _ini(j, order, limits) + ini_meet,
        combined=ini_meet,
        lhs_initial=ini_big,
    )
    if report.lattice_equality != report.condition_b:
        raise InvariantViolation("S-nice distributivity conditions disagree")
    return report


@dataclass
class SniceSumReport:
    total: Ideal
    snice: bool
    witness: Optional[SniceWitness] = None


def snice_family_sum(
    gb_j: GroebnerBasis, es: Sequence[Ideal], limits: Optional[EngineLimits] = None
) -> SniceSumReport:
    """For E_1..E_m S-nice with respect to G_J and pairwise G-nice, the sum is S-nice."""
    if not es:
        raise InputError("family of ideals is empty")
    order = gb_j.order
    for index, e in enumerate(es):
        if snice_witness(e, gb_j, limits) is not None:
            raise PreconditionError(f"E_{index} is not S-nice with respect to G_J")
    for a in range(len(es)):
        for b in range(a + 1, len(es)):
            if not is_gnice(es[a], es[b], order, GniceMode.A, limits).verdict:
                raise NotGniceError(f"(E_{a}, E_{b}) is not a G-nice pair")

    total = reduce(ideal_sum, es)
    witness = snice_witness(total, gb_j, limits)
    report = SniceSumReport(total, witness is None, witness)
    if not report.snice:
        raise InvariantViolation("sum of pairwise G-nice S-nice ideals is not S-nice")
    return report


@dataclass
class SharpSumReport:
    sharp: MonomialIdeal
    sum_preserved: bool


def sharp_sum_check(
    gb_j: GroebnerBasis, e: MonomialIdeal, f: MonomialIdeal, limits: Optional[EngineLimits] = None
) -> SharpSumReport:
    """Given a monomial F containing E, S-nice with respect to G_J and with J+F = J+E,
    the S-nice monomial closure keeps J + E_sharp = J + E."""
    limits = resolve(limits)
    order = gb_j.order
    j = gb_j.ideal()
    if not e.issubset(f):
        raise PreconditionError("E is not contained in F")
    if snice_witness(f.to_ideal(), gb_j, limits) is not None:
        raise PreconditionError("F is not S-nice with respect to G_J")
    if not ideal_equal(j + e.to_ideal(), j + f.to_ideal(), order, limits):
        raise PreconditionError("J + F differs from J + E")

    sharp, trace = sharp_closure(gb_j, e, limits)
    report = SharpSumReport(sharp, bool(trace.sum_preserved))
    if not (report.sum_preserved and sharp.issubset(f)):
        raise InvariantViolation("S-nice monomial closure is not below F or changed J + E")
    return report
