from __future__ import annotations

from sorted_core.errors import AlgebraError


class NotACongruence(AlgebraError):
    """An equivalence was used as a congruence, but is not compatible with the operations"""

    pass


class NotAHomomorphism(AlgebraError):
    """A sorted map does not commute with the operation tables"""

    pass
