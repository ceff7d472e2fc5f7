from __future__ import annotations

from sorted_core.errors import AlgebraError

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Optional, Tuple


class SignatureError(AlgebraError):
    """A signature was declared inconsistently"""

    pass


class TermSyntaxError(AlgebraError):
    """A term could not be read. position is a (line, column) pair, both 1-based"""

    def __init__(self, message: str, position: Optional[Tuple[int, int]] = None):
        self.reason = message
        if position is not None:
            message = "{}:{}: {}".format(position[0], position[1], message)
        super().__init__(message)
        self.position = position
