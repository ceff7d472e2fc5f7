from __future__ import annotations

from dataclasses import dataclass, field

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Any, List, Optional


@dataclass(frozen=True)
class Failure:
    """One violated condition, with the smallest witness found"""

    condition: str
    message: str
    witness: Optional[Any] = None


@dataclass
class Verdict:
    """The outcome of a bounded check.

    partial is set when a sample budget ran out before everything was checked;
    gaps lists what the sampled universe could not reach.
    """

    name: str
    failures: List[Failure] = field(default_factory=list)
    checked: int = 0
    partial: bool = False
    gaps: List[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return len(self.failures) == 0

    def fail(self, condition: str, message: str, witness: Optional[Any] = None) -> None:
        self.failures.append(Failure(condition, message, witness))

    def failed(self, condition: str) -> bool:
        return any(f.condition == condition for f in self.failures)

    def __bool__(self) -> bool:
        return self.holds


class Budget(object):
    """Counts down a sample budget"""

    def __init__(self, total: int):
        self.total = total
        self.used = 0

    def spend(self) -> bool:
        """Uses up one sample; False once nothing is left"""

        if self.used >= self.total:
            return False
        self.used += 1
        return True

    @property
    def exhausted(self) -> bool:
        return self.used >= self.total
