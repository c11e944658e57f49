"""Closure operators: the G-nice monomial closure, the S-nice closure and the
S-nice monomial closure, plus the normal form ideal NF(E | G_J).

Each closure is a fixed-point iteration over an ascending chain of ideals;
the trace records every iterate and the generators added to reach it. The
last step of a trace adds nothing and repeats the previous iterate.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field, replace
from typing import Optional, Union

from gnice.core.constants import GniceMode
from gnice.core.groebner import GroebnerBasis, groebner_basis, ideal_contains, ideal_equal, s_polynomial
from gnice.core.ideal import Ideal, MonomialIdeal
from gnice.core.ideal_algebra import is_binomial_ideal
from gnice.core.limits import EngineLimits, resolve
from gnice.core.monomial import MonomialOrder
from gnice.core.niceness import is_gnice, is_snice
from gnice.core.polynomial import Polynomial
from gnice.exceptions import InvariantViolation, ResourceLimitError

logger = logging.getLogger(__name__)

Snapshot = Union[Ideal, MonomialIdeal]


@dataclass(frozen=True)
class ClosureStep:
    index: int
    snapshot: Snapshot
    added: tuple[Polynomial, ...] = ()


@dataclass
class ClosureTrace:
    steps: list[ClosureStep] = field(default_factory=list)
    # J + closure = J + E; computed by the monomial closures
    sum_preserved: Optional[bool] = None

    @property
    def fixed_point(self) -> Snapshot:
        return self.steps[-1].snapshot

    @property
    def iterations(self) -> int:
        """Number of steps that enlarged the ideal."""
        return sum(1 for step in self.steps if step.added)

    def record(self, snapshot: Snapshot, added: Sequence[Polynomial] = ()) -> None:
        self.steps.append(ClosureStep(len(self.steps), snapshot, tuple(added)))


def _monomials(ideal: MonomialIdeal, monomials) -> tuple[Polynomial, ...]:
    return tuple(Polynomial.monomial(ideal.ring, m) for m in monomials)


def hat_closure(
    j: Ideal, e: MonomialIdeal, order: Optional[MonomialOrder] = None, limits: Optional[EngineLimits] = None
) -> tuple[MonomialIdeal, ClosureTrace]:
    """The smallest monomial ideal containing E that forms a G-nice pair with J.

    Each round adds the minimal generators of ini(J + E_i) that lie in
    neither ini(J) nor E_i.
    """
    j.ring.check_same(e.ring)
    limits = resolve(limits)
    order = order or MonomialOrder.degrevlex(j.ring.arity)
    ini_j = groebner_basis(j, order, limits).initial_ideal()

    trace = ClosureTrace()
    current = e
    trace.record(current)
    for _ in range(limits.max_iterations):
        ini_sum = groebner_basis(j + current.to_ideal(), order, limits).initial_ideal()
        added = sorted(ini_sum.missing_from(ini_j + current), key=order.display_key)
        if not added:
            trace.record(current)
            break
        current = current + MonomialIdeal.of(j.ring, added)
        trace.record(current, _monomials(current, added))
        logger.debug("hat_closure: step %d added %d generators", len(trace.steps) - 1, len(added))
    else:
        raise ResourceLimitError(f"hat closure did not stabilize within {limits.max_iterations} iterations")

    trace.sum_preserved = ideal_equal(j + e.to_ideal(), j + current.to_ideal(), order, limits)
    if limits.check_invariants:
        if not e.issubset(current):
            raise InvariantViolation("hat closure lost generators of E")
        if not is_gnice(j, current.to_ideal(), order, GniceMode.A, limits).verdict:
            raise InvariantViolation("hat closure is not G-nice with J")
        if not trace.sum_preserved and is_binomial_ideal(j, order, limits):
            raise InvariantViolation("J is binomial but J + E_hat differs from J + E")
    return current, trace


def tilde_closure(
    gb_j: GroebnerBasis, e: Ideal, limits: Optional[EngineLimits] = None
) -> tuple[Ideal, ClosureTrace]:
    """The smallest ideal containing E that is S-nice with respect to G_J.

    Each round adds S(f, g) for f in G_J and g in the reduced basis of E_i,
    keeping only those outside E_i. Snapshots are reduced Groebner bases.
    """
    e.ring.check_same(gb_j.ring)
    limits = resolve(limits)
    order = gb_j.order

    trace = ClosureTrace()
    current = groebner_basis(e, order, limits)
    trace.record(current.ideal())
    for _ in range(limits.max_iterations):
        added: list[Polynomial] = []
        for f in gb_j:
            for g in current:
                s = s_polynomial(f, g, order)
                if not current.contains(s) and s not in added:
                    added.append(s)
        if not added:
            trace.record(current.ideal())
            break
        current = groebner_basis(Ideal(e.ring, current.generators + tuple(added)), order, limits)
        trace.record(current.ideal(), added)
        logger.debug("tilde_closure: step %d added %d S-polynomials", len(trace.steps) - 1, len(added))
    else:
        raise ResourceLimitError(f"S-nice closure did not stabilize within {limits.max_iterations} iterations")

    closure = current.ideal()
    if limits.check_invariants:
        j = gb_j.ideal()
        if not is_snice(closure, gb_j, limits):
            raise InvariantViolation("S-nice closure is not S-nice")
        if not ideal_equal(j + e, j + closure, order, limits):
            raise InvariantViolation("S-nice closure changed J + E")
    return closure, trace


def sharp_closure(
    gb_j: GroebnerBasis,
    e: MonomialIdeal,
    limits: Optional[EngineLimits] = None,
    hat: Optional[MonomialIdeal] = None,
) -> tuple[MonomialIdeal, ClosureTrace]:
    """The smallest monomial ideal containing E that is S-nice with respect to G_J.

    Alternates the S-nice closure with taking the ideal generated by every
    monomial occurring in its generators. `hat`, the G-nice monomial closure
    of E when the caller already has it, is only used by the invariant checks.
    """
    e.ring.check_same(gb_j.ring)
    limits = resolve(limits)
    order = gb_j.order

    trace = ClosureTrace()
    current = e
    trace.record(current)
    first_tilde: Optional[Ideal] = None
    for _ in range(limits.max_iterations):
        tilde, _ = tilde_closure(gb_j, current.to_ideal(), limits)
        if first_tilde is None:
            first_tilde = tilde
        support = MonomialIdeal.of(e.ring, (m for g in tilde for m in g.support()))
        added = sorted(support.missing_from(current), key=order.display_key)
        if not added:
            trace.record(current)
            break
        current = current + support
        trace.record(current, _monomials(current, added))
        logger.debug("sharp_closure: step %d added %d monomials", len(trace.steps) - 1, len(added))
    else:
        raise ResourceLimitError(
            f"S-nice monomial closure did not stabilize within {limits.max_iterations} iterations"
        )

    j = gb_j.ideal()
    trace.sum_preserved = ideal_equal(j + e.to_ideal(), j + current.to_ideal(), order, limits)
    if limits.check_invariants and first_tilde is not None:
        sharp = current.to_ideal()
        if not ideal_contains(first_tilde, e.to_ideal(), order, limits):
            raise InvariantViolation("E is not contained in its S-nice closure")
        if not ideal_contains(sharp, first_tilde, order, limits):
            raise InvariantViolation("S-nice closure is not contained in the S-nice monomial closure")
        if hat is None:
            hat, _ = hat_closure(j, e, order, replace(limits, check_invariants=False))
        if not hat.issubset(current):
            raise InvariantViolation("G-nice monomial closure is not contained in the S-nice monomial closure")
        if all(len(g) <= 2 for g in gb_j) and not ideal_equal(first_tilde, sharp, order, limits):
            raise InvariantViolation("binomial G_J but the S-nice closure is not monomial")
    return current, trace


def nf_ideal(gb_j: GroebnerBasis, e: Ideal, limits: Optional[EngineLimits] = None) -> Ideal:
    """The ideal NF(E | G_J), generated by reduced normal forms.

    The normal forms of the reduced bases of E and of J + E are taken; the
    second set keeps every minimal generator of ini(J + E) outside ini(J), so
    the result forms a G-nice pair with J. All of these normal forms lie in
    NF(E | G_J) because NF(j + e) = NF(e) for j in J.
    """
    e.ring.check_same(gb_j.ring)
    limits = resolve(limits)
    order = gb_j.order
    j = gb_j.ideal()
    sources = groebner_basis(e, order, limits).generators + groebner_basis(j + e, order, limits).generators
    result = groebner_basis(Ideal(e.ring, (gb_j.normal_form(g) for g in sources)), order, limits).ideal()

    if limits.check_invariants:
        if not ideal_equal(j + e, j + result, order, limits):
            raise InvariantViolation("J + NF(E) differs from J + E")
        if not is_gnice(j, result, order, GniceMode.A, limits).verdict:
            raise InvariantViolation("(J, NF(E)) is not G-nice")
    return result
