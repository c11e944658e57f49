"""Ideals given by generators, and monomial ideals given by G(E)."""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from gnice.core import monomial as mono
from gnice.core.monomial import Exponents, MonomialOrder
from gnice.core.polynomial import Polynomial
from gnice.core.ring import Ring


class Ideal:
    """The ideal generated by a finite list of polynomials.

    Zero generators are dropped, so an ideal with no generators is (0).
    """

    __slots__ = ("generators", "ring")

    def __init__(self, ring: Ring, generators: Iterable[Polynomial] = ()) -> None:
        gens = []
        for g in generators:
            ring.check_same(g.ring)
            if g:
                gens.append(g)
        self.ring = ring
        self.generators: tuple[Polynomial, ...] = tuple(gens)

    @classmethod
    def of(cls, *generators: Polynomial) -> "Ideal":
        if not generators:
            raise ValueError("Ideal.of needs at least one generator to infer the ring")
        return cls(generators[0].ring, generators)

    def is_zero(self) -> bool:
        return not self.generators

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __add__(self, other: "Ideal") -> "Ideal":
        self.ring.check_same(other.ring)
        return Ideal(self.ring, self.generators + other.generators)

    def __repr__(self) -> str:
        return f"Ideal({list(self.generators)!r})"


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal stored by its unique minimal generating set G(E)."""

    ring: Ring
    generators: tuple[Exponents, ...]

    @classmethod
    def of(cls, ring: Ring, monomials: Iterable[Exponents]) -> "MonomialIdeal":
        gens = mono.minimalize([tuple(m) for m in monomials])
        for m in gens:
            if len(m) != ring.arity:
                raise ValueError(f"monomial {m} does not fit {ring}")
        return cls(ring, tuple(gens))

    @classmethod
    def zero(cls, ring: Ring) -> "MonomialIdeal":
        return cls(ring, ())

    @classmethod
    def from_ideal(cls, ideal: Ideal) -> "MonomialIdeal":
        """Read a monomial ideal off single-term generators (coefficients dropped)."""
        if not all(g.is_monomial() for g in ideal):
            raise ValueError("ideal is not given by monomial generators")
        return cls.of(ideal.ring, (g.support()[0] for g in ideal))

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return mono.one(self.ring.arity) in self.generators

    def __iter__(self) -> Iterator[Exponents]:
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def contains(self, m: Exponents) -> bool:
        return any(mono.divides(g, m) for g in self.generators)

    def __contains__(self, m: object) -> bool:
        return isinstance(m, tuple) and self.contains(m)

    def issubset(self, other: "MonomialIdeal") -> bool:
        return all(other.contains(m) for m in self.generators)

    def __le__(self, other: "MonomialIdeal") -> bool:
        return self.issubset(other)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self.ring.check_same(other.ring)
        return MonomialIdeal.of(self.ring, self.generators + other.generators)

    def intersection(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """Minimal generators of {lcm(a, b) : a in G(self), b in G(other)}."""
        self.ring.check_same(other.ring)
        return MonomialIdeal.of(self.ring, (mono.lcm(a, b) for a in self.generators for b in other.generators))

    def quotient(self, m: Exponents) -> "MonomialIdeal":
        """The colon ideal (self : m)."""
        return MonomialIdeal.of(self.ring, (mono.colon(g, m) for g in self.generators))

    def missing_from(self, other: "MonomialIdeal") -> list[Exponents]:
        """Minimal generators of self that do not lie in other."""
        return [m for m in self.generators if not other.contains(m)]

    def sorted(self, order: MonomialOrder) -> list[Exponents]:
        return sorted(self.generators, key=order.display_key)

    def to_ideal(self) -> Ideal:
        return Ideal(self.ring, (Polynomial.monomial(self.ring, m) for m in self.generators))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ring == other.ring and set(self.generators) == set(other.generators)

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.generators)))
