import functools
import logging
from typing import Any, Callable, TypeVar

import click

from gnice.core.constants import ExitCode
from gnice.exceptions import GniceError
from gnice.utils.console import Console

logger = logging.getLogger(__name__)

F = TypeVar("F", bound=Callable[..., Any])


def handle_errors(func: F) -> F:
    """Report errors on stderr and exit with the code of their class.

    Computed verdicts, TRUE or FALSE, return normally and exit 0.
    """

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        ctx = click.get_current_context()
        try:
            return func(*args, **kwargs)
        except (click.ClickException, click.exceptions.Exit):
            raise
        except GniceError as e:
            logger.debug("%s failed", ctx.info_name, exc_info=True)
            Console.error(str(e))
            ctx.exit(int(e.exit_code))
        except Exception as e:
            logger.exception("unexpected error in %s", ctx.info_name)
            Console.error(f"Unexpected error: {e}")
            ctx.exit(int(ExitCode.INTERNAL_ERROR))

    return wrapper  # type: ignore[return-value]
