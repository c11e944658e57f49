"""Custom exceptions for gnice."""

from typing import Optional

from gnice.core.constants import ExitCode


class GniceError(Exception):
    """Base exception for gnice."""

    exit_code: ExitCode = ExitCode.INTERNAL_ERROR


class InputError(GniceError):
    """Raised when user supplied data cannot be used."""

    exit_code = ExitCode.INPUT_ERROR


class ParseError(InputError):
    """Raised when a polynomial, order or session file does not parse."""

    pass


class EmptyIdealError(InputError):
    """Raised when an operation needs at least one nonzero generator."""

    pass


class RingMismatchError(InputError):
    """Raised when operands live in different rings."""

    pass


class PreconditionError(GniceError):
    """Raised when a mathematical precondition of an operation fails."""

    exit_code = ExitCode.PRECONDITION_FAILED


class ZeroPolynomialError(PreconditionError):
    """Raised when a leading term is demanded from the zero polynomial."""

    pass


class NotGniceError(PreconditionError):
    """Raised when a pair required to be G-nice is not."""

    pass


class NotRegularSequenceError(PreconditionError):
    """Raised when a sequence is not regular on S/J."""

    def __init__(self, index: int, message: Optional[str] = None) -> None:
        self.index = index
        super().__init__(message or f"not a regular sequence: element {index} is a zero-divisor")


class ResourceLimitError(GniceError):
    """Raised when a pair, degree or iteration cap is exceeded."""

    exit_code = ExitCode.RESOURCE_LIMIT


class ExactDivisionError(GniceError):
    """Raised when a polynomial expected to divide another does not."""

    pass


class InvariantViolation(GniceError):
    """Raised when two equivalent conditions disagree or a post-condition fails."""

    pass
