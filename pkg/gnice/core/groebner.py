"""S-polynomials, normal forms and Buchberger's algorithm.

The pair bookkeeping follows Gebauer and Moeller: new pairs are filtered by
the coprime and chain criteria, old pairs whose lcm is split by the new
leading monomial are dropped, and basis elements whose leading monomial is
divisible by the new one leave the active set. Pairs are taken in the normal
strategy (smallest lcm first).
"""

import heapq
import logging
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from gnice.core import monomial as mono
from gnice.core.ideal import Ideal, MonomialIdeal
from gnice.core.limits import EngineLimits, resolve
from gnice.core.monomial import Exponents, MonomialOrder
from gnice.core.polynomial import Polynomial
from gnice.core.ring import Ring, Scalar
from gnice.exceptions import EmptyIdealError, PreconditionError, ResourceLimitError, ZeroPolynomialError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroebnerBasis:
    """Generators of an ideal that form a Groebner basis for `order`."""

    ring: Ring
    generators: tuple[Polynomial, ...]
    order: MonomialOrder
    reduced: bool = True

    @classmethod
    def verified(cls, ring: Ring, polys: Iterable[Polynomial], order: MonomialOrder) -> "GroebnerBasis":
        """Wrap a user supplied basis after checking Buchberger's criterion."""
        gens = tuple(p for p in polys if p)
        if not satisfies_buchberger_criterion(gens, order):
            raise PreconditionError("the given polynomials are not a Groebner basis for this order")
        return cls(ring, gens, order, reduced=is_reduced(gens, order))

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def is_zero(self) -> bool:
        return not self.generators

    def leading_monomials(self) -> list[Exponents]:
        return [g.leading_monomial(self.order) for g in self.generators]

    def initial_ideal(self) -> MonomialIdeal:
        return MonomialIdeal.of(self.ring, self.leading_monomials())

    def ideal(self) -> Ideal:
        return Ideal(self.ring, self.generators)

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.generators, self.order)

    def contains(self, f: Polynomial) -> bool:
        return not self.normal_form(f)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """lcm/ini(f) * f/lc(f) - lcm/ini(g) * g/lc(g)."""
    if not f or not g:
        raise ZeroPolynomialError("S-polynomial of the zero polynomial")
    f.ring.check_same(g.ring)
    domain = f.ring.domain
    cf, mf = f.leading_term(order)
    cg, mg = g.leading_term(order)
    m = mono.lcm(mf, mg)
    return f.mul_term(domain.inv(cf), mono.quotient(m, mf)) - g.mul_term(domain.inv(cg), mono.quotient(m, mg))


def normal_form(g: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder) -> Polynomial:
    """The fully reduced remainder of g modulo `basis`.

    Monomials are visited from the highest down; each one divisible by a
    leading monomial is cancelled with the first such basis element in list
    order, the others move to the remainder.
    """
    reducers: list[tuple[Exponents, Scalar, list[tuple[Exponents, Scalar]]]] = []
    for b in basis:
        if not b:
            continue
        g.ring.check_same(b.ring)
        lc, lm = b.leading_term(order)
        tail = [(m, c) for m, c in b.items() if m != lm]
        reducers.append((lm, g.ring.domain.inv(lc), tail))
    if not reducers or not g:
        return g

    domain = g.ring.domain
    key = order.key
    work: dict[Exponents, Scalar] = dict(g.items())
    heap = [(_neg(key(m)), m) for m in work]
    heapq.heapify(heap)
    remainder: dict[Exponents, Scalar] = {}

    while heap:
        _, m = heapq.heappop(heap)
        c = work.pop(m, None)
        if c is None:
            continue
        for lm, lc_inv, tail in reducers:
            if mono.divides(lm, m):
                factor = domain.mul(c, lc_inv)
                shift = mono.quotient(m, lm)
                for tm, tc in tail:
                    target = mono.mul(tm, shift)
                    if target in work:
                        value = domain.sub_mul(work[target], factor, tc)
                        if value:
                            work[target] = value
                        else:
                            del work[target]
                    else:
                        work[target] = domain.neg(domain.mul(factor, tc))
                        heapq.heappush(heap, (_neg(key(target)), target))
                break
        else:
            remainder[m] = c
    return Polynomial._wrap(g.ring, remainder)


def _neg(key: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-v for v in key)


class _PairQueue:
    """Critical pairs as a set, popped through a heap keyed by the order of their lcm."""

    def __init__(self, order: MonomialOrder) -> None:
        self.key = order.key
        self.pairs: dict[tuple[int, int], Exponents] = {}
        self.heap: list[tuple[tuple[int, ...], int, int]] = []

    def __bool__(self) -> bool:
        return bool(self.pairs)

    def add(self, i: int, j: int, lcm: Exponents) -> None:
        self.pairs[(i, j)] = lcm
        heapq.heappush(self.heap, (self.key(lcm), i, j))

    def pop(self) -> tuple[int, int]:
        while True:
            _, i, j = heapq.heappop(self.heap)
            if (i, j) in self.pairs:
                del self.pairs[(i, j)]
                return i, j

    def retain(self, keep: Iterable[tuple[int, int]]) -> None:
        kept = set(keep)
        self.pairs = {pair: lcm for pair, lcm in self.pairs.items() if pair in kept}


class _Buchberger:
    def __init__(self, ring: Ring, order: MonomialOrder, limits: EngineLimits) -> None:
        self.ring = ring
        self.order = order
        self.limits = limits
        self.basis: list[Polynomial] = []
        self.lms: list[Exponents] = []
        self.active: list[int] = []
        self.queue = _PairQueue(order)
        self.processed = 0

    def reducers(self) -> list[Polynomial]:
        return [self.basis[i] for i in self.active]

    def insert(self, h: Polynomial) -> None:
        h = h.monic(self.order)
        if h.total_degree() > self.limits.max_degree:
            raise ResourceLimitError(
                f"degree cap exceeded: basis element of degree {h.total_degree()} (max {self.limits.max_degree})"
            )
        index = len(self.basis)
        self.basis.append(h)
        self.lms.append(h.leading_monomial(self.order))
        self.update(index)

    def update(self, h: int) -> None:
        lms = self.lms
        lm_h = lms[h]

        candidates = list(self.active)
        chosen: list[int] = []
        while candidates:
            g = candidates.pop()
            lcm = mono.lcm(lm_h, lms[g])
            others = candidates + chosen
            if mono.coprime(lm_h, lms[g]) or not any(mono.divides(mono.lcm(lm_h, lms[o]), lcm) for o in others):
                chosen.append(g)
        fresh = [g for g in chosen if not mono.coprime(lm_h, lms[g])]

        kept = []
        for (g1, g2), lcm in self.queue.pairs.items():
            if (
                not mono.divides(lm_h, lcm)
                or mono.lcm(lms[g1], lm_h) == lcm
                or mono.lcm(lms[g2], lm_h) == lcm
            ):
                kept.append((g1, g2))
        self.queue.retain(kept)
        for g in fresh:
            self.queue.add(g, h, mono.lcm(lms[g], lm_h))

        self.active = [g for g in self.active if not mono.divides(lm_h, lms[g])] + [h]

    def run(self, generators: Sequence[Polynomial]) -> list[Polynomial]:
        key = self.order.key
        for f in sorted(generators, key=lambda p: key(p.leading_monomial(self.order))):
            h = normal_form(f, self.reducers(), self.order)
            if h:
                self.insert(h)

        while self.queue:
            self.processed += 1
            if self.processed > self.limits.max_pairs:
                raise ResourceLimitError(f"pair cap exceeded: more than {self.limits.max_pairs} S-pairs")
            i, j = self.queue.pop()
            s = s_polynomial(self.basis[i], self.basis[j], self.order)
            h = normal_form(s, self.reducers(), self.order)
            if h:
                self.insert(h)

        logger.debug(
            "buchberger: %d pairs reduced, %d polynomials generated, %d kept",
            self.processed,
            len(self.basis),
            len(self.active),
        )
        return self.interreduce()

    def interreduce(self) -> list[Polynomial]:
        minimal = [self.basis[i] for i in self.active]
        reduced = []
        for index, g in enumerate(minimal):
            lm = g.leading_monomial(self.order)
            others = minimal[:index] + minimal[index + 1 :]
            lead = Polynomial._wrap(self.ring, {lm: self.ring.domain.one})
            reduced.append(lead + normal_form(g - lead, others, self.order))
        return sort_basis(reduced, self.order)


def sort_basis(polys: Iterable[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    """Canonical listing: ascending degree, then descending in `order`, of the leading monomials."""
    return sorted(polys, key=lambda p: order.display_key(p.leading_monomial(order)))


@lru_cache(maxsize=512)
def _reduced_basis(
    ring: Ring, generators: tuple[Polynomial, ...], order: MonomialOrder, limits: EngineLimits
) -> tuple[Polynomial, ...]:
    return tuple(_Buchberger(ring, order, limits).run(generators))


def buchberger(ideal: Ideal, order: MonomialOrder, limits: Optional[EngineLimits] = None) -> GroebnerBasis:
    """The reduced Groebner basis of a nonzero ideal."""
    if ideal.is_zero():
        raise EmptyIdealError("ideal has no nonzero generators")
    generators = tuple(sorted(set(ideal.generators), key=_generator_key))
    basis = _reduced_basis(ideal.ring, generators, order, resolve(limits))
    return GroebnerBasis(ideal.ring, basis, order, reduced=True)


def _generator_key(p: Polynomial) -> tuple:
    return tuple(sorted((m, str(c)) for m, c in p.items()))


def groebner_basis(ideal: Ideal, order: MonomialOrder, limits: Optional[EngineLimits] = None) -> GroebnerBasis:
    """Like `buchberger`, but the zero ideal gets the empty basis."""
    if ideal.is_zero():
        return GroebnerBasis(ideal.ring, (), order, reduced=True)
    return buchberger(ideal, order, limits)


def initial_ideal(ideal: Ideal, order: MonomialOrder, limits: Optional[EngineLimits] = None) -> MonomialIdeal:
    return groebner_basis(ideal, order, limits).initial_ideal()


def ideal_membership(
    f: Polynomial, ideal: Ideal, order: Optional[MonomialOrder] = None, limits: Optional[EngineLimits] = None
) -> bool:
    if not f:
        return True
    ideal.ring.check_same(f.ring)
    order = order or MonomialOrder.degrevlex(ideal.ring.arity)
    return groebner_basis(ideal, order, limits).contains(f)


def criterion_witness(polys: Sequence[Polynomial], order: MonomialOrder) -> Optional[Polynomial]:
    """The first nonzero reduced S-polynomial of the list, if any."""
    gens = [p for p in polys if p]
    lms = [p.leading_monomial(order) for p in gens]
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if mono.coprime(lms[i], lms[j]):
                continue
            remainder = normal_form(s_polynomial(gens[i], gens[j], order), gens, order)
            if remainder:
                return remainder
    return None


def satisfies_buchberger_criterion(polys: Sequence[Polynomial], order: MonomialOrder) -> bool:
    """Every S-polynomial of two elements reduces to zero modulo the list."""
    return criterion_witness(polys, order) is None


def is_reduced(polys: Sequence[Polynomial], order: MonomialOrder) -> bool:
    lms = [p.leading_monomial(order) for p in polys]
    for index, p in enumerate(polys):
        if p.leading_coefficient(order) != p.ring.domain.one:
            return False
        others = lms[:index] + lms[index + 1 :]
        if any(mono.divides(lm, m) for m in p.support() for lm in others):
            return False
    return True


def ideal_equal(
    first: Ideal, second: Ideal, order: Optional[MonomialOrder] = None, limits: Optional[EngineLimits] = None
) -> bool:
    first.ring.check_same(second.ring)
    order = order or MonomialOrder.degrevlex(first.ring.arity)
    a = groebner_basis(first, order, limits)
    b = groebner_basis(second, order, limits)
    return set(a.generators) == set(b.generators)


def ideal_contains(
    big: Ideal, small: Ideal, order: Optional[MonomialOrder] = None, limits: Optional[EngineLimits] = None
) -> bool:
    """True when every generator of `small` lies in `big`."""
    big.ring.check_same(small.ring)
    order = order or MonomialOrder.degrevlex(big.ring.arity)
    basis = groebner_basis(big, order, limits)
    return all(basis.contains(f) for f in small)
