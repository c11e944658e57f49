"""Text forms of polynomials, monomials, orders and rings.

Polynomial grammar (whitespace ignored)::

    polynomial := ["+" | "-"] term (("+" | "-") term)*
    term       := factor (["*"] factor)*
    factor     := INT ["/" INT] | VAR ["^" INT]

Variables must be declared in the ring.
"""

import re
from collections.abc import Sequence
from fractions import Fraction
from typing import Optional

from gnice.core.config import settings
from gnice.core.constants import ORDER_ALIASES, Field, OrderKind
from gnice.core.monomial import Exponents, MonomialOrder
from gnice.core.polynomial import Polynomial
from gnice.core.ring import RATIONALS, CoefficientField, PrimeField, Ring, Scalar
from gnice.exceptions import InputError, ParseError

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*/^])|(?P<bad>\S))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens: list[tuple[str, str]] = []
    for match in _TOKEN.finditer(text):
        kind = match.lastgroup
        if kind is None:
            continue
        if kind == "bad":
            raise ParseError(f"unexpected character '{match.group(kind)}' in '{text}'")
        tokens.append((kind, match.group(kind)))
    return tokens


class _PolynomialParser:
    def __init__(self, text: str, ring: Ring) -> None:
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.pos = 0

    def _peek(self) -> Optional[tuple[str, str]]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _next(self) -> tuple[str, str]:
        token = self._peek()
        if token is None:
            raise ParseError(f"unexpected end of input in '{self.text}'")
        self.pos += 1
        return token

    def _accept(self, op: str) -> bool:
        token = self._peek()
        if token == ("op", op):
            self.pos += 1
            return True
        return False

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise ParseError("empty polynomial")
        terms: dict[Exponents, Scalar] = {}
        domain = self.ring.domain
        sign = 1
        if self._accept("-"):
            sign = -1
        else:
            self._accept("+")
        while True:
            coefficient, exps = self._term()
            value = domain.convert(coefficient * sign)
            terms[exps] = domain.add(terms[exps], value) if exps in terms else value
            if self._accept("+"):
                sign = 1
            elif self._accept("-"):
                sign = -1
            elif self._peek() is None:
                break
            else:
                raise ParseError(f"unexpected '{self._peek()[1]}' in '{self.text}'")  # type: ignore[index]
        return Polynomial(self.ring, terms)

    def _term(self) -> tuple[Fraction, Exponents]:
        coefficient_sink = [Fraction(1)]
        exps = [0] * self.ring.arity
        self._factor(exps, coefficient_sink)
        while True:
            token = self._peek()
            if token == ("op", "*"):
                self.pos += 1
                self._factor(exps, coefficient_sink)
            elif token is not None and token[0] in ("int", "var"):
                self._factor(exps, coefficient_sink)
            else:
                break
        return coefficient_sink[0], tuple(exps)

    def _factor(self, exps: list[int], coefficient_sink: list[Fraction]) -> None:
        kind, value = self._next()
        if kind == "int":
            number = Fraction(int(value))
            if self._accept("/"):
                kind, denominator = self._next()
                if kind != "int":
                    raise ParseError(f"malformed coefficient '{value}/{denominator}' in '{self.text}'")
                if int(denominator) == 0:
                    raise ParseError(f"division by zero in '{self.text}'")
                number /= int(denominator)
            coefficient_sink[0] *= number
        elif kind == "var":
            if value not in self.ring.variables:
                raise ParseError(f"unknown variable '{value}' in '{self.text}'")
            power = 1
            if self._accept("^"):
                kind, exponent = self._next()
                if kind != "int":
                    raise ParseError(f"malformed exponent '{exponent}' in '{self.text}'")
                power = int(exponent)
            exps[self.ring.index(value)] += power
        else:
            raise ParseError(f"unexpected '{value}' in '{self.text}'")


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    try:
        return _PolynomialParser(text, ring).parse()
    except ZeroDivisionError as e:
        raise ParseError(f"division by zero coefficient in {ring.domain.name}: {e}") from None


def parse_polynomials(text: str, ring: Ring) -> list[Polynomial]:
    """Comma separated polynomials; an empty string gives no polynomials."""
    return [parse_polynomial(part, ring) for part in text.split(",") if part.strip()]


def format_monomial(m: Exponents, ring: Ring) -> str:
    factors = [name if e == 1 else f"{name}^{e}" for name, e in zip(ring.variables, m) if e]
    return "*".join(factors) if factors else "1"


def format_polynomial(f: Polynomial, order: Optional[MonomialOrder] = None) -> str:
    """Terms descending in `order` (degrevlex in ring order when omitted)."""
    if f.is_zero():
        return "0"
    ring = f.ring
    order = order or MonomialOrder.degrevlex(ring.arity)
    pieces: list[str] = []
    for c, m in f.terms(order):
        text = ring.domain.format(c)
        negative = text.startswith("-")
        magnitude = text[1:] if negative else text
        if any(m):
            body = format_monomial(m, ring)
            body = body if magnitude == "1" else f"{magnitude}*{body}"
        else:
            body = magnitude
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(pieces)


def parse_ring(variables: str, field: str = Field.RATIONALS.value) -> Ring:
    names = tuple(name.strip() for name in variables.split(",") if name.strip())
    try:
        return Ring(names, _parse_field(field))
    except InputError as e:
        raise ParseError(str(e)) from None


def _parse_field(field: str) -> CoefficientField:
    compact = field.strip().replace(" ", "")
    if compact.upper() == Field.RATIONALS.value:
        return RATIONALS
    if compact.upper() == Field.PRIME.value:
        return PrimeField(settings.DEFAULT_PRIME)
    match = re.fullmatch(r"(?:GF|ZZ/|F_?)\(?(\d+)\)?", compact, flags=re.IGNORECASE)
    if match is None:
        raise ParseError(f"unknown coefficient field '{field}' (use QQ, GF or GF(p))")
    return PrimeField(int(match.group(1)))


_ORDER = re.compile(r"(?P<name>[A-Za-z]+)\s*(?:\((?P<args>[^)]*)\))?")


def parse_order(text: str, ring: Ring) -> MonomialOrder:
    """Parse `lex`, `degrevlex(z>y>x)`, `lex(y,x)`, `block(2)`, `block(1,lex)` ..."""
    match = _ORDER.fullmatch(text.strip())
    if match is None or match.group("name").lower() not in ORDER_ALIASES:
        raise ParseError(f"unknown monomial order '{text}'")
    kind = ORDER_ALIASES[match.group("name").lower()]
    args = [a.strip() for a in re.split(r"[,>;]", match.group("args") or "") if a.strip()]

    if kind is OrderKind.BLOCK:
        if not args or not args[0].isdigit():
            raise ParseError(f"block order needs a split position: '{text}'")
        split = int(args[0])
        rest = args[1:]
        tail_kind = None
        if rest and rest[0].lower() in ORDER_ALIASES:
            tail_kind = ORDER_ALIASES[rest[0].lower()]
            rest = rest[1:]
        precedence = _precedence(rest, ring, text)
        if not 0 < split < ring.arity + 1:
            raise ParseError(f"block split {split} outside 1..{ring.arity}")
        tail = None
        if tail_kind is OrderKind.LEX and split < ring.arity:
            tail = MonomialOrder.lex(ring.arity - split)
        elif tail_kind is OrderKind.BLOCK:
            raise ParseError("nested block orders are not supported")
        return MonomialOrder.block(ring.arity, split, tail=tail, precedence=precedence)

    precedence = _precedence(args, ring, text)
    if kind is OrderKind.LEX:
        return MonomialOrder.lex(ring.arity, precedence)
    return MonomialOrder.degrevlex(ring.arity, precedence)


def _precedence(names: Sequence[str], ring: Ring, text: str) -> Optional[list[int]]:
    if not names:
        return None
    unknown = [n for n in names if n not in ring.variables]
    if unknown:
        raise ParseError(f"unknown variable '{unknown[0]}' in order '{text}'")
    if sorted(names) != sorted(ring.variables):
        raise ParseError(f"order '{text}' must list every variable exactly once")
    return [ring.index(n) for n in names]


def describe_order(order: MonomialOrder, ring: Ring) -> str:
    return order.describe(ring.variables)
