from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Any, Optional


class AlgebraError(Exception):
    """Base class of all errors raised by the algebra apps"""

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class AmbientMismatch(AlgebraError):
    """Two sorted values do not live in the same ambient sorted set"""

    pass


class RefinementViolation(AlgebraError):
    """An equivalence was required to refine another one, but does not"""

    pass


class NoPreimage(AlgebraError):
    """A surjectivity assumption failed while choosing preimages"""

    def __init__(self, message: str, sort: str, element: str):
        super().__init__(message)
        self.sort = sort
        self.element = element


class SortMismatch(AlgebraError):
    """Something was used at a sort it does not belong to"""

    pass


class BoundExceeded(AlgebraError):
    """A configured size bound would have been exceeded.

    The optional witness is the smallest object found beyond the bound.
    """

    def __init__(self, message: str, bound: int, witness: Optional[Any] = None):
        super().__init__(message)
        self.bound = bound
        self.witness = witness


class InvalidAlgebra(AlgebraError):
    """An algebra failed validation; carries the structured diagnostics"""

    def __init__(self, message: str, diagnostics: list):
        super().__init__(message)
        self.diagnostics = diagnostics
