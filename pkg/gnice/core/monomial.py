"""Monomials as exponent vectors, and monomial orders.

A monomial x_1^a_1 ... x_n^a_n is stored as the tuple (a_1, ..., a_n). Every
order is realized by a sort key: a flat tuple of ints of fixed length such
that a > b in the order exactly when key(a) > key(b) as tuples.
"""

from collections.abc import Callable, Sequence
from dataclasses import dataclass
from enum import IntEnum
from functools import cached_property
from typing import Optional

from gnice.core.constants import OrderKind
from gnice.exceptions import RingMismatchError

Exponents = tuple[int, ...]
SortKey = tuple[int, ...]


class Comparison(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def one(arity: int) -> Exponents:
    return (0,) * arity


def degree(m: Exponents) -> int:
    return sum(m)


def mul(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


def lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x if x >= y else y for x, y in zip(a, b))


def gcd(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x if x <= y else y for x, y in zip(a, b))


def divides(a: Exponents, b: Exponents) -> bool:
    """True when the monomial a divides b."""
    return all(x <= y for x, y in zip(a, b))


def quotient(a: Exponents, b: Exponents) -> Exponents:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def colon(a: Exponents, b: Exponents) -> Exponents:
    """The generator a / gcd(a, b) of the monomial colon (a) : b."""
    return tuple(x - y if x > y else 0 for x, y in zip(a, b))


def coprime(a: Exponents, b: Exponents) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def lcm_monomial(a: Exponents, b: Exponents) -> Exponents:
    if len(a) != len(b):
        raise RingMismatchError(f"monomials of arity {len(a)} and {len(b)}")
    return lcm(a, b)


def minimalize(monomials: Sequence[Exponents]) -> list[Exponents]:
    """Drop every monomial divisible by another one (and duplicates)."""
    candidates = sorted(set(monomials), key=lambda m: (degree(m), m))
    kept: list[Exponents] = []
    for m in candidates:
        if not any(divides(g, m) for g in kept):
            kept.append(m)
    return kept


def _degrevlex_key(exps: Sequence[int]) -> SortKey:
    return (sum(exps), *(-e for e in reversed(exps)))


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order on a ring of `arity` variables.

    `precedence` lists variable positions from greatest to least; `None` means
    the ring's declared order. A block order compares the first `split`
    variables (in precedence) by degrevlex and breaks ties with `tail`, an
    order on the remaining variables (degrevlex when omitted).
    """

    kind: OrderKind
    arity: int
    precedence: Optional[tuple[int, ...]] = None
    split: int = 0
    tail: Optional["MonomialOrder"] = None

    def __post_init__(self) -> None:
        if self.precedence is not None and sorted(self.precedence) != list(range(self.arity)):
            raise ValueError(f"precedence {self.precedence} is not a permutation of {self.arity} variables")
        if self.kind is OrderKind.BLOCK:
            if not 0 < self.split <= self.arity:
                raise ValueError(f"block split {self.split} outside 1..{self.arity}")
            if self.tail is not None and self.tail.arity != self.arity - self.split:
                raise ValueError("tail order arity does not match the trailing block")

    @classmethod
    def lex(cls, arity: int, precedence: Optional[Sequence[int]] = None) -> "MonomialOrder":
        return cls(OrderKind.LEX, arity, _normalized(precedence, arity))

    @classmethod
    def degrevlex(cls, arity: int, precedence: Optional[Sequence[int]] = None) -> "MonomialOrder":
        return cls(OrderKind.DEGREVLEX, arity, _normalized(precedence, arity))

    @classmethod
    def block(
        cls,
        arity: int,
        split: int,
        tail: Optional["MonomialOrder"] = None,
        precedence: Optional[Sequence[int]] = None,
    ) -> "MonomialOrder":
        return cls(OrderKind.BLOCK, arity, _normalized(precedence, arity), split, tail)

    @cached_property
    def key(self) -> Callable[[Exponents], SortKey]:
        perm = self.precedence
        if self.kind is OrderKind.LEX:
            if perm is None:
                return lambda m: m
            return lambda m: tuple(m[i] for i in perm)
        if self.kind is OrderKind.DEGREVLEX:
            if perm is None:
                return _degrevlex_key
            return lambda m: _degrevlex_key([m[i] for i in perm])

        split = self.split
        tail_key = self.tail.key if self.tail is not None else _degrevlex_key
        order = perm if perm is not None else tuple(range(self.arity))
        head_vars, tail_vars = order[:split], order[split:]

        def block_key(m: Exponents) -> SortKey:
            return (
                *_degrevlex_key([m[i] for i in head_vars]),
                *tail_key(tuple(m[i] for i in tail_vars)),
            )

        return block_key

    @cached_property
    def display_key(self) -> Callable[[Exponents], SortKey]:
        """Sort key for listings: ascending degree, then descending in this order."""
        key = self.key
        return lambda m: (sum(m), *(-v for v in key(m)))

    def compare(self, a: Exponents, b: Exponents) -> Comparison:
        if len(a) != self.arity or len(b) != self.arity:
            raise RingMismatchError(f"monomials of arity {len(a)}, {len(b)} under an order on {self.arity} variables")
        ka, kb = self.key(a), self.key(b)
        if ka == kb:
            return Comparison.EQ
        return Comparison.GT if ka > kb else Comparison.LT

    def max(self, monomials: Sequence[Exponents]) -> Exponents:
        return max(monomials, key=self.key)

    def sorted(self, monomials: Sequence[Exponents], reverse: bool = True) -> list[Exponents]:
        return sorted(monomials, key=self.key, reverse=reverse)

    def variable_order(self) -> tuple[int, ...]:
        return self.precedence if self.precedence is not None else tuple(range(self.arity))

    def describe(self, variables: Sequence[str]) -> str:
        names = ">".join(variables[i] for i in self.variable_order())
        if self.kind is OrderKind.BLOCK:
            tail = self.tail.kind.value if self.tail is not None else OrderKind.DEGREVLEX.value
            return f"block({self.split},{tail};{names})"
        return f"{self.kind.value}({names})"


def _normalized(precedence: Optional[Sequence[int]], arity: int) -> Optional[tuple[int, ...]]:
    if precedence is None:
        return None
    perm = tuple(precedence)
    return None if perm == tuple(range(arity)) else perm
