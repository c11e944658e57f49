"""Read-only resource caps shared by every engine operation."""

from dataclasses import dataclass, replace
from typing import Optional

from gnice.core.config import settings


@dataclass(frozen=True)
class EngineLimits:
    max_pairs: int
    max_degree: int
    max_iterations: int
    check_invariants: bool = True

    @classmethod
    def from_settings(cls, slow: bool = False) -> "EngineLimits":
        return cls(
            max_pairs=settings.SLOW_MAX_PAIRS if slow else settings.MAX_PAIRS,
            max_degree=settings.SLOW_MAX_DEGREE if slow else settings.MAX_DEGREE,
            max_iterations=settings.MAX_ITERATIONS,
            check_invariants=settings.CHECK_INVARIANTS,
        )

    def override(
        self,
        max_pairs: Optional[int] = None,
        max_degree: Optional[int] = None,
        max_iterations: Optional[int] = None,
    ) -> "EngineLimits":
        changes = {
            name: value
            for name, value in (
                ("max_pairs", max_pairs),
                ("max_degree", max_degree),
                ("max_iterations", max_iterations),
            )
            if value is not None
        }
        return replace(self, **changes)


def resolve(limits: Optional[EngineLimits]) -> EngineLimits:
    return limits if limits is not None else EngineLimits.from_settings()
