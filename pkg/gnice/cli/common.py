"""Options shared by every command: the session file and the engine caps."""

import functools
import logging
from dataclasses import dataclass
from typing import Any, Callable, Optional

import click

from gnice.core.limits import EngineLimits
from gnice.core.monomial import MonomialOrder
from gnice.core.session import Session
from gnice.utils.console import Console
from gnice.utils.report import Report

logger = logging.getLogger(__name__)


@dataclass
class Workbench:
    """What a command works on: the loaded session, the active order and the caps."""

    session: Session
    order: MonomialOrder
    limits: EngineLimits

    @classmethod
    def open(
        cls,
        session_file: str,
        order: Optional[str] = None,
        max_pairs: Optional[int] = None,
        max_iters: Optional[int] = None,
        slow: bool = False,
    ) -> "Workbench":
        session = Session.load(session_file)
        limits = EngineLimits.from_settings(slow=slow).override(max_pairs=max_pairs, max_iterations=max_iters)
        if slow:
            Console.info(f"Slow mode: up to {limits.max_pairs} S-pairs, degree {limits.max_degree}")
        active = session.order_for(order)
        logger.debug("session %s: %s, order %s, %s", session_file, session.ring, active, limits)
        return cls(session, active, limits)

    def report(self, command: str) -> Report:
        return Report(command, self.session.ring, self.order)


def engine_options(func: Callable[..., Any]) -> Callable[..., Any]:
    """Add the session argument and engine flags; the command receives a `Workbench`."""

    @click.argument("session_file", type=click.Path(exists=True, dir_okay=False))
    @click.option("--order", "order_text", default=None, help="Monomial order for this run, e.g. 'lex(y>x)'.")
    @click.option("--max-pairs", type=click.IntRange(min=1), default=None, help="Cap on S-pairs per basis.")
    @click.option("--max-iters", type=click.IntRange(min=1), default=None, help="Cap on closure iterations.")
    @click.option("--slow", is_flag=True, help="Raise the caps for large computations.")
    @functools.wraps(func)
    def wrapper(
        session_file: str,
        order_text: Optional[str],
        max_pairs: Optional[int],
        max_iters: Optional[int],
        slow: bool,
        **kwargs: Any,
    ) -> Any:
        bench = Workbench.open(session_file, order_text, max_pairs, max_iters, slow)
        return func(bench, **kwargs)

    return wrapper


def j_option(func: Callable[..., Any]) -> Callable[..., Any]:
    return click.option("--J", "j_name", default="J", show_default=True, help="Name of the ideal J.")(func)


def e_option(func: Callable[..., Any]) -> Callable[..., Any]:
    return click.option("--E", "e_name", default="E", show_default=True, help="Name of the ideal E.")(func)


def gb_option(func: Callable[..., Any]) -> Callable[..., Any]:
    return click.option(
        "--gb", "gb_name", default=None, help="Name of a session basis to use as G_J (default: reduced basis of J)."
    )(func)
