"""Immutable sparse multivariate polynomials with exact coefficients.

A polynomial carries its ring but no monomial order: every operation that
depends on an order (leading term, sorted terms, monic normalization) takes the
order as an argument, so the same polynomial can be looked at under several
orders.
"""

from collections.abc import Iterable, Iterator, Mapping
from fractions import Fraction
from typing import Union

from gnice.core import monomial as mono
from gnice.core.monomial import Exponents, MonomialOrder
from gnice.core.ring import Ring, Scalar
from gnice.exceptions import ExactDivisionError, ZeroPolynomialError

Term = tuple[Scalar, Exponents]


class Polynomial:
    """A finite sum of terms c * x^a with nonzero coefficients."""

    __slots__ = ("_hash", "_terms", "ring")

    def __init__(self, ring: Ring, terms: Union[Mapping[Exponents, Scalar], Iterable[Term]] = ()) -> None:
        self.ring = ring
        domain = ring.domain
        collected: dict[Exponents, Scalar] = {}
        items = terms.items() if isinstance(terms, Mapping) else ((m, c) for c, m in terms)
        for m, c in items:
            m = tuple(m)
            if len(m) != ring.arity:
                raise ValueError(f"monomial {m} does not fit {ring}")
            if any(e < 0 for e in m):
                raise ValueError(f"negative exponent in {m}")
            value = domain.convert(c)
            collected[m] = domain.add(collected[m], value) if m in collected else value
        self._terms: dict[Exponents, Scalar] = {m: c for m, c in collected.items() if c}
        self._hash: Union[int, None] = None

    @classmethod
    def _wrap(cls, ring: Ring, terms: dict[Exponents, Scalar]) -> "Polynomial":
        """Adopt an already clean dict (no zero coefficients, converted scalars)."""
        poly = cls.__new__(cls)
        poly.ring = ring
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def zero(cls, ring: Ring) -> "Polynomial":
        return cls._wrap(ring, {})

    @classmethod
    def constant(cls, ring: Ring, value: Union[int, Fraction] = 1) -> "Polynomial":
        c = ring.domain.convert(value)
        return cls._wrap(ring, {mono.one(ring.arity): c} if c else {})

    @classmethod
    def monomial(cls, ring: Ring, exponents: Exponents, coefficient: Union[int, Fraction] = 1) -> "Polynomial":
        c = ring.domain.convert(coefficient)
        return cls._wrap(ring, {tuple(exponents): c} if c else {})

    @classmethod
    def variable(cls, ring: Ring, name: str) -> "Polynomial":
        exps = [0] * ring.arity
        exps[ring.index(name)] = 1
        return cls.monomial(ring, tuple(exps))

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_monomial(self) -> bool:
        """A single term (any nonzero coefficient)."""
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def coefficient(self, m: Exponents) -> Scalar:
        return self._terms.get(tuple(m), self.ring.domain.zero)

    def support(self) -> list[Exponents]:
        return list(self._terms)

    def items(self) -> Iterator[tuple[Exponents, Scalar]]:
        return iter(self._terms.items())

    def total_degree(self) -> int:
        return max((mono.degree(m) for m in self._terms), default=-1)

    def terms(self, order: MonomialOrder) -> list[Term]:
        """Terms (coefficient, monomial), strictly descending in `order`."""
        key = order.key
        return [(self._terms[m], m) for m in sorted(self._terms, key=key, reverse=True)]

    def leading_monomial(self, order: MonomialOrder) -> Exponents:
        if not self._terms:
            raise ZeroPolynomialError("the zero polynomial has no leading monomial")
        return max(self._terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder) -> Scalar:
        return self._terms[self.leading_monomial(order)]

    def leading_term(self, order: MonomialOrder) -> Term:
        m = self.leading_monomial(order)
        return self._terms[m], m

    def monic(self, order: MonomialOrder) -> "Polynomial":
        if not self._terms:
            raise ZeroPolynomialError("the zero polynomial cannot be made monic")
        return self.scale(self.ring.domain.inv(self.leading_coefficient(order)))

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        self.ring.check_same(other.ring)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        domain = self.ring.domain
        result = dict(self._terms)
        for m, c in other._terms.items():
            if m in result:
                value = domain.add(result[m], c)
                if value:
                    result[m] = value
                else:
                    del result[m]
            else:
                result[m] = c
        return Polynomial._wrap(self.ring, result)

    def __neg__(self) -> "Polynomial":
        neg = self.ring.domain.neg
        return Polynomial._wrap(self.ring, {m: neg(c) for m, c in self._terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: Union["Polynomial", int, Fraction]) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(self.ring.domain.convert(other))
        self._check(other)
        domain = self.ring.domain
        result: dict[Exponents, Scalar] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = mono.mul(ma, mb)
                c = domain.mul(ca, cb)
                if m in result:
                    result[m] = domain.add(result[m], c)
                else:
                    result[m] = c
        return Polynomial._wrap(self.ring, {m: c for m, c in result.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        result = Polynomial.constant(self.ring)
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, factor: Scalar) -> "Polynomial":
        if not factor:
            return Polynomial.zero(self.ring)
        mul = self.ring.domain.mul
        return Polynomial._wrap(self.ring, {m: mul(c, factor) for m, c in self._terms.items()})

    def mul_term(self, factor: Scalar, m: Exponents) -> "Polynomial":
        """Multiply by the term factor * x^m."""
        if not factor:
            return Polynomial.zero(self.ring)
        mul = self.ring.domain.mul
        return Polynomial._wrap(self.ring, {mono.mul(a, m): mul(c, factor) for a, c in self._terms.items()})

    def exact_quotient(self, divisor: "Polynomial", order: MonomialOrder) -> "Polynomial":
        """self / divisor for a divisor known to divide self exactly."""
        self._check(divisor)
        domain = self.ring.domain
        lc, lm = divisor.leading_term(order)
        lc_inv = domain.inv(lc)
        remainder, quotient = self, Polynomial.zero(self.ring)
        while remainder:
            c, m = remainder.leading_term(order)
            if not mono.divides(lm, m):
                raise ExactDivisionError("polynomial does not divide exactly")
            factor, shift = domain.mul(c, lc_inv), mono.quotient(m, lm)
            quotient = quotient + Polynomial._wrap(self.ring, {shift: factor})
            remainder = remainder - divisor.mul_term(factor, shift)
        return quotient

    # -- ring changes -----------------------------------------------------

    def extend(self, ring: Ring) -> "Polynomial":
        """Embed into `ring`, which has one extra leading variable."""
        return Polynomial._wrap(ring, {(0, *m): c for m, c in self._terms.items()})

    def restrict(self, ring: Ring) -> "Polynomial":
        """Drop the leading variable; the polynomial must not involve it."""
        if any(m[0] for m in self._terms):
            raise ValueError("polynomial involves the eliminated variable")
        return Polynomial._wrap(ring, {m[1:]: c for m, c in self._terms.items()})

    # -- identity ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        from gnice.core.parser import format_polynomial

        return f"Polynomial({format_polynomial(self)!r})"
