from __future__ import annotations

from sorted_core.errors import AlgebraError

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Optional


class WorkspaceError(AlgebraError):
    """A workspace file could not be loaded; carries where the problem is"""

    def __init__(self, message: str, path: Optional[str] = None, line: Optional[int] = None):
        self.path = path
        self.line = line
        if path is not None:
            if line is not None:
                message = "{}:{}: {}".format(path, line, message)
            else:
                message = "{}: {}".format(path, message)
        super().__init__(message)
