"""Sums, intersections, colons and regularity tests for ideals."""

import logging
from collections.abc import Sequence
from typing import Optional

from gnice.core.groebner import GroebnerBasis, groebner_basis, ideal_equal, sort_basis
from gnice.core.ideal import Ideal, MonomialIdeal
from gnice.core.limits import EngineLimits
from gnice.core.monomial import Exponents, MonomialOrder
from gnice.core.polynomial import Polynomial
from gnice.exceptions import ExactDivisionError, ZeroPolynomialError

logger = logging.getLogger(__name__)


def _default_order(ideal: Ideal, order: Optional[MonomialOrder]) -> MonomialOrder:
    return order or MonomialOrder.degrevlex(ideal.ring.arity)


def ideal_sum(first: Ideal, second: Ideal) -> Ideal:
    return first + second


def ideal_product(first: Ideal, second: Ideal) -> Ideal:
    first.ring.check_same(second.ring)
    return Ideal(first.ring, (f * g for f in first for g in second))


def elimination_order(order: MonomialOrder) -> MonomialOrder:
    """Order on (t, x_1..x_n): t first, ties broken by `order` on the x's."""
    return MonomialOrder.block(order.arity + 1, 1, tail=order)


def ideal_intersection(
    first: Ideal, second: Ideal, order: Optional[MonomialOrder] = None, limits: Optional[EngineLimits] = None
) -> Ideal:
    """I cap J by eliminating t from t*I + (1 - t)*J.

    The generators returned are the reduced Groebner basis of the
    intersection for `order`.
    """
    first.ring.check_same(second.ring)
    ring = first.ring
    order = _default_order(first, order)
    if first.is_zero() or second.is_zero():
        return Ideal(ring)

    extended = ring.extended(ring.fresh_variable("t"))
    t = Polynomial.monomial(extended, (1,) + (0,) * ring.arity)
    one_minus_t = Polynomial.constant(extended) - t
    generators = [t * f.extend(extended) for f in first] + [one_minus_t * g.extend(extended) for g in second]
    basis = groebner_basis(Ideal(extended, generators), elimination_order(order), limits)

    kept = [g.restrict(ring) for g in basis if all(m[0] == 0 for m in g.support())]
    logger.debug("intersection: %d of %d elimination basis elements are t-free", len(kept), len(basis))
    return Ideal(ring, sort_basis(kept, order))


def monomial_intersection(first: MonomialIdeal, second: MonomialIdeal) -> MonomialIdeal:
    return first.intersection(second)


def ideal_colon(
    ideal: Ideal, f: Polynomial, order: Optional[MonomialOrder] = None, limits: Optional[EngineLimits] = None
) -> Ideal:
    """(J : f) = (J cap (f)) / f."""
    if not f:
        raise ZeroPolynomialError("colon by the zero polynomial")
    ideal.ring.check_same(f.ring)
    order = _default_order(ideal, order)
    meet = ideal_intersection(ideal, Ideal(ideal.ring, [f]), order, limits)
    try:
        quotients = [h.exact_quotient(f, order) for h in meet]
    except ExactDivisionError as e:
        raise ExactDivisionError(f"intersection with (f) produced a non-multiple of f: {e}") from None
    return Ideal(ideal.ring, quotients)


def is_regular_element(
    f: Polynomial, ideal: Ideal, order: Optional[MonomialOrder] = None, limits: Optional[EngineLimits] = None
) -> bool:
    """True when multiplication by f is injective on S/J, i.e. (J : f) = J."""
    if not f:
        raise ZeroPolynomialError("the zero polynomial is never regular")
    if ideal.is_zero():
        return True
    order = _default_order(ideal, order)
    return ideal_equal(ideal_colon(ideal, f, order, limits), ideal, order, limits)


def first_monomial_zero_divisor(ideal: MonomialIdeal, monomials: Sequence[Exponents]) -> Optional[int]:
    """Index of the first m_i that is a zero-divisor modulo M + (m_1..m_{i-1})."""
    current = ideal
    for index, m in enumerate(monomials):
        if current.quotient(m) != current:
            return index
        current = current + MonomialIdeal.of(ideal.ring, [m])
    return None


def monomial_regular_sequence_check(ideal: MonomialIdeal, monomials: Sequence[Exponents]) -> bool:
    return first_monomial_zero_divisor(ideal, monomials) is None


def is_binomial_ideal(
    ideal: Ideal, order: Optional[MonomialOrder] = None, limits: Optional[EngineLimits] = None
) -> bool:
    """Reduced Groebner basis made of polynomials with at most two terms."""
    basis = groebner_basis(ideal, _default_order(ideal, order), limits)
    return all(len(g) <= 2 for g in basis)


def is_monomial_ideal(
    ideal: Ideal, order: Optional[MonomialOrder] = None, limits: Optional[EngineLimits] = None
) -> bool:
    basis = groebner_basis(ideal, _default_order(ideal, order), limits)
    return all(g.is_monomial() for g in basis)


def as_monomial_ideal(
    ideal: Ideal, order: Optional[MonomialOrder] = None, limits: Optional[EngineLimits] = None
) -> Optional[MonomialIdeal]:
    """The monomial ideal equal to `ideal`, or None when it is not monomial."""
    basis: GroebnerBasis = groebner_basis(ideal, _default_order(ideal, order), limits)
    if not all(g.is_monomial() for g in basis):
        return None
    return basis.initial_ideal()
