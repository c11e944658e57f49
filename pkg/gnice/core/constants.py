from enum import Enum, IntEnum

REPORT_HEADER = "gnice-report v1"


class ExitCode(IntEnum):
    OK = 0
    INTERNAL_ERROR = 1
    INPUT_ERROR = 2
    PRECONDITION_FAILED = 3
    RESOURCE_LIMIT = 4


class OrderKind(str, Enum):
    LEX = "lex"
    DEGREVLEX = "degrevlex"
    BLOCK = "block"


# Spellings accepted in session files and on the command line.
ORDER_ALIASES: dict[str, OrderKind] = {
    "lex": OrderKind.LEX,
    "lp": OrderKind.LEX,
    "degrevlex": OrderKind.DEGREVLEX,
    "revlex": OrderKind.DEGREVLEX,
    "grevlex": OrderKind.DEGREVLEX,
    "dp": OrderKind.DEGREVLEX,
    "block": OrderKind.BLOCK,
}


class Condition(str, Enum):
    """Equivalent characterizations of a G-nice pair that are decided directly."""

    A = "A"  # ini(J+E) = ini(J) + ini(E)
    C = "C"  # union of Groebner bases is a Groebner basis of J+E
    D = "D"  # ini(J cap E) = ini(J) cap ini(E)


class GniceMode(str, Enum):
    A = "A"
    C = "C"
    D = "D"
    BOTH = "both"
    ALL = "all"

    @property
    def conditions(self) -> tuple[Condition, ...]:
        if self is GniceMode.BOTH:
            return (Condition.A, Condition.D)
        if self is GniceMode.ALL:
            return (Condition.A, Condition.C, Condition.D)
        return (Condition(self.value),)


class Field(str, Enum):
    RATIONALS = "QQ"
    PRIME = "GF"
