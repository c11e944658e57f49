"""Deterministic plain-text reports written to stdout."""

from collections.abc import Iterable
from typing import Optional, Union

import click

from gnice.core.closures import ClosureTrace
from gnice.core.constants import REPORT_HEADER
from gnice.core.groebner import GroebnerBasis
from gnice.core.ideal import Ideal, MonomialIdeal
from gnice.core.monomial import Exponents, MonomialOrder
from gnice.core.parser import describe_order, format_monomial, format_polynomial
from gnice.core.polynomial import Polynomial
from gnice.core.ring import Ring


def verdict(value: bool) -> str:
    return "TRUE" if value else "FALSE"


class Report:
    """Lines of a report: a fixed header, then `label: value` and `NAME = ideal` entries."""

    def __init__(self, command: str, ring: Ring, order: MonomialOrder) -> None:
        self.ring = ring
        self.order = order
        self.lines = [
            REPORT_HEADER,
            f"command: {command}",
            f"ring: {ring}",
            f"order: {describe_order(order, ring)}",
        ]

    # -- formatting ---------------------------------------------------------

    def poly(self, f: Polynomial) -> str:
        return format_polynomial(f, self.order)

    def monomial(self, m: Exponents) -> str:
        return format_monomial(m, self.ring)

    def element(self, w: Union[Exponents, Polynomial]) -> str:
        return self.poly(w) if isinstance(w, Polynomial) else self.monomial(w)

    def ideal(self, ideal: Union[Ideal, MonomialIdeal, GroebnerBasis, Iterable[Polynomial]]) -> str:
        if isinstance(ideal, MonomialIdeal):
            items = [self.monomial(m) for m in ideal.sorted(self.order)]
        else:
            items = [self.poly(g) for g in ideal]
        return f"({', '.join(items)})" if items else "(0)"

    def basis(self, basis: GroebnerBasis) -> str:
        return "{" + ", ".join(self.poly(g) for g in basis) + "}"

    # -- lines --------------------------------------------------------------

    def add(self, label: str, value: object) -> "Report":
        self.lines.append(f"{label}: {value}")
        return self

    def equation(self, name: str, value: str) -> "Report":
        self.lines.append(f"{name} = {value}")
        return self

    def verdict(self, value: bool, witness: Optional[str] = None, label: str = "verdict") -> "Report":
        text = verdict(value)
        if not value and witness is not None:
            text += f"  witness: {witness}"
        return self.add(label, text)

    def trace(self, name: str, trace: ClosureTrace) -> "Report":
        for step in trace.steps:
            line = f"{name}_{step.index} = {self.ideal(step.snapshot)}"
            if step.added:
                line += f"  added: {', '.join(self.poly(g) for g in step.added)}"
            self.lines.append(line)
        return self.add("iterations", trace.iterations)

    def emit(self) -> None:
        click.echo("\n".join(self.lines))
