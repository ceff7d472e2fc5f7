from __future__ import annotations

from dataclasses import dataclass, replace

from django.conf import settings

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Optional


@dataclass(frozen=True)
class Limits:
    """A snapshot of the size bounds every bounded operation respects"""

    max_carrier: int
    max_homs: int
    formation_carrier: int
    max_algebras: int
    max_candidates: int
    sample_budget: int

    @classmethod
    def from_settings(cls, **overrides: Optional[int]) -> Limits:
        """Reads the bounds from the django settings, applying any non-None overrides"""

        limits = cls(
            max_carrier=settings.ALGEBRA_MAX_CARRIER,
            max_homs=settings.ALGEBRA_MAX_HOMS,
            formation_carrier=settings.FORMATION_MAX_CARRIER,
            max_algebras=settings.FORMATION_MAX_ALGEBRAS,
            max_candidates=settings.FORMATION_MAX_CANDIDATES,
            sample_budget=settings.EILENBERG_SAMPLE_BUDGET,
        )
        return limits.override(**overrides)

    def override(self, **overrides: Optional[int]) -> Limits:
        changes = {k: v for (k, v) in overrides.items() if v is not None}
        if not changes:
            return self
        return replace(self, **changes)


def resolve(limits: Optional[Limits]) -> Limits:
    """Returns limits, or the settings defaults when None"""

    if limits is None:
        return Limits.from_settings()
    return limits
