"""Polynomial rings K[x_1, ..., x_n] and their coefficient fields."""

import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from gnice.exceptions import InputError, RingMismatchError

Scalar = Union[Fraction, int]

VARIABLE_PATTERN = re.compile(r"[A-Za-z][A-Za-z0-9_]*")

# Residues are multiplied as Python ints; keeping p below 2**31 keeps every
# product inside a machine word.
MAX_PRIME = 2**31


class CoefficientField(ABC):
    """Exact arithmetic on the coefficients of a ring."""

    @property
    @abstractmethod
    def name(self) -> str: ...

    @property
    @abstractmethod
    def zero(self) -> Scalar: ...

    @property
    @abstractmethod
    def one(self) -> Scalar: ...

    @abstractmethod
    def convert(self, value: Union[int, Fraction]) -> Scalar: ...

    @abstractmethod
    def add(self, a: Scalar, b: Scalar) -> Scalar: ...

    @abstractmethod
    def sub(self, a: Scalar, b: Scalar) -> Scalar: ...

    @abstractmethod
    def mul(self, a: Scalar, b: Scalar) -> Scalar: ...

    @abstractmethod
    def neg(self, a: Scalar) -> Scalar: ...

    @abstractmethod
    def inv(self, a: Scalar) -> Scalar: ...

    @abstractmethod
    def format(self, a: Scalar) -> str: ...

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def sub_mul(self, a: Scalar, b: Scalar, c: Scalar) -> Scalar:
        """Return a - b*c."""
        return self.sub(a, self.mul(b, c))


@dataclass(frozen=True)
class Rationals(CoefficientField):
    """The field QQ; elements are `Fraction`s in lowest terms."""

    @property
    def name(self) -> str:
        return "QQ"

    @property
    def zero(self) -> Scalar:
        return Fraction(0)

    @property
    def one(self) -> Scalar:
        return Fraction(1)

    def convert(self, value: Union[int, Fraction]) -> Scalar:
        return Fraction(value)

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return a + b

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return a - b

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return a * b

    def neg(self, a: Scalar) -> Scalar:
        return -a

    def inv(self, a: Scalar) -> Scalar:
        if not a:
            raise ZeroDivisionError("inverse of zero in QQ")
        return 1 / Fraction(a)

    def sub_mul(self, a: Scalar, b: Scalar, c: Scalar) -> Scalar:
        return a - b * c

    def format(self, a: Scalar) -> str:
        return str(Fraction(a))


@dataclass(frozen=True)
class PrimeField(CoefficientField):
    """The field GF(p); elements are residues in [0, p)."""

    p: int

    def __post_init__(self) -> None:
        if not 2 <= self.p < MAX_PRIME or not _is_prime(self.p):
            raise InputError(f"GF({self.p}): characteristic must be a prime below 2^31")

    @property
    def name(self) -> str:
        return f"GF({self.p})"

    @property
    def zero(self) -> Scalar:
        return 0

    @property
    def one(self) -> Scalar:
        return 1

    def convert(self, value: Union[int, Fraction]) -> Scalar:
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator {value.denominator} vanishes in GF({self.p})")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return value % self.p

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return (a + b) % self.p

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return (a - b) % self.p

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return a * b % self.p

    def neg(self, a: Scalar) -> Scalar:
        return -a % self.p

    def inv(self, a: Scalar) -> Scalar:
        if not a % self.p:
            raise ZeroDivisionError(f"inverse of zero in GF({self.p})")
        return pow(int(a), -1, self.p)

    def sub_mul(self, a: Scalar, b: Scalar, c: Scalar) -> Scalar:
        return (a - b * c) % self.p

    def format(self, a: Scalar) -> str:
        # symmetric representative, so -1 prints as -1 rather than p-1
        value = int(a)
        return str(value - self.p if value > self.p // 2 else value)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    divisor = 3
    while divisor * divisor <= n:
        if n % divisor == 0:
            return False
        divisor += 2
    return True


RATIONALS = Rationals()


@dataclass(frozen=True)
class Ring:
    """The polynomial ring over `domain` in the ordered `variables`."""

    variables: tuple[str, ...]
    domain: CoefficientField = RATIONALS

    def __post_init__(self) -> None:
        if not self.variables:
            raise InputError("a ring needs at least one variable")
        for name in self.variables:
            if not VARIABLE_PATTERN.fullmatch(name):
                raise InputError(f"invalid variable name '{name}'")
        if len(set(self.variables)) != len(self.variables):
            raise InputError(f"duplicate variable names in {', '.join(self.variables)}")

    @property
    def arity(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise InputError(f"unknown variable '{name}'") from None

    def fresh_variable(self, base: str = "t") -> str:
        candidate, counter = base, 0
        while candidate in self.variables:
            candidate = f"{base}_{counter}"
            counter += 1
        return candidate

    def extended(self, name: str) -> "Ring":
        """The ring with `name` prepended as the first variable."""
        return Ring((name, *self.variables), self.domain)

    def check_same(self, other: "Ring") -> None:
        if self != other:
            raise RingMismatchError(f"ring mismatch: {self} vs {other}")

    def __str__(self) -> str:
        return f"{self.domain.name}[{','.join(self.variables)}]"
