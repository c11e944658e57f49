"""Session files: a ring, an order and named ideals, bases and polynomials.

    # comments and blank lines are ignored
    ring x,y,z over QQ
    order degrevlex
    ideal J = x^2+y^2+z^2
    ideal E = x*y
    ideal Z =
    gb G = x^2+y^2+z^2
    poly f = x*y

`ideal NAME =` with nothing after it is the zero ideal.
"""

import logging
import re
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ConfigDict, ValidationError, field_validator, model_validator

from gnice.core.config import settings
from gnice.core.groebner import GroebnerBasis, groebner_basis
from gnice.core.ideal import Ideal, MonomialIdeal
from gnice.core.ideal_algebra import as_monomial_ideal
from gnice.core.limits import EngineLimits
from gnice.core.monomial import MonomialOrder
from gnice.core.parser import parse_order, parse_polynomial, parse_ring
from gnice.core.polynomial import Polynomial
from gnice.core.ring import VARIABLE_PATTERN, Ring
from gnice.exceptions import InputError, ParseError, PreconditionError

logger = logging.getLogger(__name__)

_RING = re.compile(r"ring\s+(?P<variables>[^\s].*?)(?:\s+over\s+(?P<field>\S+))?\s*$")
_ENTRY = re.compile(r"(?P<kind>ideal|gb|poly)\s+(?P<name>\S+)\s*=\s*(?P<body>.*)$")


class SessionFile(BaseModel):
    """Validated contents of a session file."""

    model_config = ConfigDict(frozen=True)

    variables: list[str]
    coefficients: str = "QQ"
    order: str = settings.DEFAULT_ORDER
    ideals: dict[str, list[str]] = {}
    bases: dict[str, list[str]] = {}
    polys: dict[str, str] = {}

    @field_validator("variables")
    @classmethod
    def check_variables(cls, value: list[str]) -> list[str]:
        if not value:
            raise ValueError("ring declares no variables")
        return value

    @model_validator(mode="after")
    def check_entries(self) -> "SessionFile":
        names = [*self.ideals, *self.bases, *self.polys]
        for name in names:
            if not VARIABLE_PATTERN.fullmatch(name):
                raise ValueError(f"invalid name '{name}'")
        duplicates = sorted({n for n in names if names.count(n) > 1})
        if duplicates:
            raise ValueError(f"names used more than once: {', '.join(duplicates)}")

        ring = parse_ring(",".join(self.variables), self.coefficients)
        parse_order(self.order, ring)
        for polys in (*self.ideals.values(), *self.bases.values()):
            for text in polys:
                parse_polynomial(text, ring)
        for text in self.polys.values():
            parse_polynomial(text, ring)
        return self

    @classmethod
    def from_text(cls, text: str) -> "SessionFile":
        fields: dict = {"ideals": {}, "bases": {}, "polys": {}}
        seen: set[str] = set()
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            keyword = line.split(None, 1)[0]
            if keyword == "ring":
                match = _RING.match(line)
                if match is None or "variables" in fields:
                    raise ParseError(f"line {number}: bad or repeated ring declaration")
                fields["variables"] = [v.strip() for v in match.group("variables").split(",") if v.strip()]
                if match.group("field"):
                    fields["coefficients"] = match.group("field")
            elif keyword == "order":
                fields["order"] = line[len("order") :].strip()
            elif keyword in ("ideal", "gb", "poly"):
                match = _ENTRY.match(line)
                if match is None:
                    raise ParseError(f"line {number}: expected '{keyword} NAME = ...'")
                name, body = match.group("name"), match.group("body").strip()
                if name in seen:
                    raise ParseError(f"line {number}: name '{name}' already defined")
                seen.add(name)
                if keyword == "poly":
                    fields["polys"][name] = body
                else:
                    target = "ideals" if keyword == "ideal" else "bases"
                    fields[target][name] = [p.strip() for p in body.split(",") if p.strip()]
            else:
                raise ParseError(f"line {number}: unknown entry '{keyword}'")

        if "variables" not in fields:
            raise ParseError("session declares no ring")
        try:
            return cls(**fields)
        except ValidationError as e:
            errors = "; ".join(err["msg"] for err in e.errors())
            raise ParseError(f"invalid session: {errors}") from None


class Session:
    """A parsed session: the ring, its default order and the named objects."""

    def __init__(self, source: SessionFile) -> None:
        self.source = source
        self.ring: Ring = parse_ring(",".join(source.variables), source.coefficients)
        self.order: MonomialOrder = parse_order(source.order, self.ring)
        self.ideals = {
            name: Ideal(self.ring, [parse_polynomial(p, self.ring) for p in polys])
            for name, polys in source.ideals.items()
        }
        self.bases = {name: [parse_polynomial(p, self.ring) for p in polys] for name, polys in source.bases.items()}
        self.polys = {name: parse_polynomial(text, self.ring) for name, text in source.polys.items()}

    @classmethod
    def from_text(cls, text: str) -> "Session":
        return cls(SessionFile.from_text(text))

    @classmethod
    def load(cls, path: str) -> "Session":
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as e:
            raise InputError(f"cannot read session file {path}: {e.strerror}") from None
        logger.debug("loaded session %s", path)
        return cls.from_text(text)

    def order_for(self, override: Optional[str]) -> MonomialOrder:
        return parse_order(override, self.ring) if override else self.order

    def ideal(self, name: str) -> Ideal:
        if name not in self.ideals:
            known = ", ".join(self.ideals) or "none"
            raise InputError(f"unknown ideal '{name}' (defined: {known})")
        return self.ideals[name]

    def monomial_ideal(self, name: str, order: MonomialOrder, limits: Optional[EngineLimits] = None) -> MonomialIdeal:
        ideal = self.ideal(name)
        if all(g.is_monomial() for g in ideal):
            return MonomialIdeal.from_ideal(ideal)
        result = as_monomial_ideal(ideal, order, limits)
        if result is None:
            raise PreconditionError(f"ideal '{name}' is not a monomial ideal")
        return result

    def polynomial(self, ref: str) -> Polynomial:
        """A named polynomial, or `ref` itself parsed as a polynomial."""
        if ref in self.polys:
            return self.polys[ref]
        return parse_polynomial(ref, self.ring)

    def polynomials(self, refs: str) -> list[Polynomial]:
        if refs in self.ideals:
            return list(self.ideals[refs].generators)
        return [self.polynomial(r.strip()) for r in refs.split(",") if r.strip()]

    def basis_for(
        self, j_name: str, gb_name: Optional[str], order: MonomialOrder, limits: Optional[EngineLimits] = None
    ) -> GroebnerBasis:
        """The named basis G_J when given (checked), otherwise the reduced basis of J."""
        if gb_name is None:
            return groebner_basis(self.ideal(j_name), order, limits)
        if gb_name not in self.bases:
            known = ", ".join(self.bases) or "none"
            raise InputError(f"unknown basis '{gb_name}' (defined: {known})")
        return GroebnerBasis.verified(self.ring, self.bases[gb_name], order)
