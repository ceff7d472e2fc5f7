"""Reading and printing terms in fully parenthesized prefix syntax.

    term  := '(' IDENT term* ')'

A leaf (x) is a variable iff x is a declared generator, otherwise it has to
be a nullary operation.
"""

from __future__ import annotations

import re

from .errors import TermSyntaxError
from .reader import Atom, read_one
from .terms import Context, Term

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Dict, List, Mapping, Optional, Tuple, Union

    from .reader import SList
    from .signature import Signature
    from .terms import GeneratorSet

IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_'-]*\Z")


def is_ident(name: str) -> bool:
    return IDENT.match(name) is not None


def parse_term(
    text: str,
    signature: Signature,
    generators: GeneratorSet,
    extra: Optional[Mapping[str, str]] = None,
) -> Term:
    """Parses text into a well-sorted term over generators.

    extra declares additional variables (name -> sort), used for holes.
    """

    return term_from_sexpr(read_one(text), signature, generators, extra)


def term_from_sexpr(
    node: Union[Atom, SList],
    signature: Signature,
    generators: GeneratorSet,
    extra: Optional[Mapping[str, str]] = None,
) -> Term:
    extra = extra or {}

    def sort_of_variable(name: str) -> Optional[str]:
        if name in extra:
            return extra[name]
        if generators.declares(name):
            return generators.sort_of(name)
        return None

    # each frame: (node, parsed children so far)
    done: List[Term] = []
    stack: List[Tuple[SList, bool]] = []

    def push(n: Union[Atom, SList]) -> None:
        if isinstance(n, Atom):
            raise TermSyntaxError(
                "Expected '(' before {0!r}".format(n.value), n.position
            )
        if len(n.items) == 0:
            raise TermSyntaxError("Empty application", n.position)
        head = n.items[0]
        if not isinstance(head, Atom) or not is_ident(head.value):
            raise TermSyntaxError("Expected an identifier", head.position)
        stack.append((n, False))

    push(node)
    while stack:
        n, expanded = stack.pop()
        head = n.items[0]
        args = n.items[1:]

        if not expanded and len(args) > 0:
            stack.append((n, True))
            for arg in reversed(args):
                push(arg)
            continue

        name = head.value
        if len(args) == 0:
            sort = sort_of_variable(name)
            if sort is not None:
                done.append(Term.var(name, sort))
                continue

        if not signature.has_op(name):
            raise TermSyntaxError("Unknown symbol {0!r}".format(name), head.position)
        op = signature.op(name)

        if len(args) != len(op.arity):
            raise TermSyntaxError(
                "{0!r} expects {1} arguments, got {2}".format(
                    name, len(op.arity), len(args)
                ),
                head.position,
            )

        children = tuple(done[len(done) - len(args) :]) if args else ()
        if args:
            del done[len(done) - len(args) :]

        for (arg, child, sort) in zip(args, children, op.arity):
            if child.sort != sort:
                raise TermSyntaxError(
                    "Argument of {0!r} must have sort {1!r}, not {2!r}".format(
                        name, sort, child.sort
                    ),
                    arg.position,
                )

        done.append(Term(op.name, op.coarity, children))

    return done[0]


def parse_context(
    text: str,
    signature: Signature,
    generators: GeneratorSet,
    hole: str = Context.DEFAULT_HOLE,
    hole_sort: Optional[str] = None,
) -> Context:
    """Parses a one-hole context; the hole is written as the leaf (hole)"""

    if hole_sort is None:
        hole_sort = _guess_hole_sort(text, signature, generators, hole)
    signature.check_sort(hole_sort)

    term = parse_term(text, signature, generators, extra={hole: hole_sort})
    return Context(term, hole, hole_sort)


def _guess_hole_sort(
    text: str, signature: Signature, generators: GeneratorSet, hole: str
) -> str:
    """Tries every sort for the hole and returns the unique one that parses"""

    found: List[str] = []
    for s in signature.sorts:
        try:
            parse_term(text, signature, generators, extra={hole: s})
        except TermSyntaxError:
            continue
        found.append(s)

    if len(found) != 1:
        raise TermSyntaxError(
            "Cannot determine the sort of the hole {0!r}; give it explicitly".format(
                hole
            )
        )
    return found[0]


def print_term(t: Term) -> str:
    """Prints a term in the canonical whitespace normal form"""

    parts: List[str] = []
    stack: List[Union[Term, str]] = [t]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            parts.append(item)
            continue

        parts.append("(" + item.symbol)
        stack.append(")")
        for child in reversed(item.children):
            stack.append(child)
            stack.append(" ")
    return "".join(parts)
