"""A small s-expression reader that remembers where everything came from.

Atoms are maximal runs of characters other than whitespace, parentheses and
';'. A ';' starts a comment that runs to the end of the line.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import TermSyntaxError

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Iterator, List, Tuple, Union

T_OPEN = "("
T_CLOSE = ")"
T_ATOM = "atom"

_TOKEN = re.compile(
    r"(?P<space>[ \t\r\n]+)"
    r"|(?P<comment>;[^\n]*)"
    r"|(?P<open>\()"
    r"|(?P<close>\))"
    r"|(?P<atom>[^\s();]+)"
)


@dataclass(frozen=True)
class Token:
    kind: str
    value: str
    line: int
    column: int

    @property
    def position(self) -> Tuple[int, int]:
        return (self.line, self.column)


@dataclass(frozen=True)
class Atom:
    value: str
    position: Tuple[int, int]


@dataclass(frozen=True)
class SList:
    items: Tuple[Union[Atom, SList], ...]
    position: Tuple[int, int]

    def head(self) -> str:
        """The leading atom, or '' when the list is empty or starts with a list"""

        if len(self.items) > 0 and isinstance(self.items[0], Atom):
            return self.items[0].value
        return ""


def tokenize(text: str) -> Iterator[Token]:
    line, line_start = 1, 0
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise TermSyntaxError(
                "Unexpected character {0!r}".format(text[pos]), (line, pos - line_start + 1)
            )

        kind = match.lastgroup
        column = pos - line_start + 1
        if kind == "open":
            yield Token(T_OPEN, "(", line, column)
        elif kind == "close":
            yield Token(T_CLOSE, ")", line, column)
        elif kind == "atom":
            yield Token(T_ATOM, match.group(), line, column)

        # keep track of line numbers
        chunk = match.group()
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            line_start = pos + chunk.rindex("\n") + 1
        pos = match.end()


def read(text: str) -> List[Union[Atom, SList]]:
    """Reads all top-level forms of text"""

    forms: List[Union[Atom, SList]] = []
    stack: List[Tuple[Tuple[int, int], list]] = []

    for token in tokenize(text):
        if token.kind == T_OPEN:
            stack.append((token.position, []))
        elif token.kind == T_CLOSE:
            if not stack:
                raise TermSyntaxError("Unexpected ')'", token.position)
            position, items = stack.pop()
            node = SList(tuple(items), position)
            if stack:
                stack[-1][1].append(node)
            else:
                forms.append(node)
        else:
            node = Atom(token.value, token.position)
            if stack:
                stack[-1][1].append(node)
            else:
                forms.append(node)

    if stack:
        raise TermSyntaxError("Unexpected end of input inside a list", stack[-1][0])
    return forms


def read_one(text: str) -> Union[Atom, SList]:
    forms = read(text)
    if len(forms) != 1:
        raise TermSyntaxError(
            "Expected exactly one expression, found {}".format(len(forms)),
            forms[1].position if len(forms) > 1 else (1, 1),
        )
    return forms[0]
