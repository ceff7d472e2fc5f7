"""Terms of the free algebra over a generator set.

A term is a tree. Leaves are generator occurrences or nullary operations,
inner nodes are operation applications. Equality is structural.
"""

from __future__ import annotations

from sorted_core.errors import SortMismatch
from sorted_core.sets import SortedSet

from .errors import SignatureError

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Callable, Dict, Iterable, Iterator, List, Optional, Tuple

    from .signature import Signature

VARIABLE = "variable"
CONSTANT = "constant"
COMPOSITE = "composite"


class Term(object):
    """A well-sorted term. Build with Term.var and Term.apply"""

    __slots__ = ("symbol", "sort", "children", "is_variable", "_hash", "_size")

    def __init__(
        self,
        symbol: str,
        sort: str,
        children: Tuple[Term, ...] = (),
        is_variable: bool = False,
    ):
        if is_variable and children:
            raise SortMismatch("A variable leaf has no children")

        self.symbol = symbol
        self.sort = sort
        self.children = tuple(children)
        self.is_variable = is_variable

        self._hash = hash(
            (symbol, sort, is_variable, tuple(c._hash for c in self.children))
        )
        self._size = 1 + sum(c._size for c in self.children)

    @classmethod
    def var(cls, name: str, sort: str) -> Term:
        return cls(name, sort, (), True)

    @classmethod
    def apply(cls, signature: Signature, op_name: str, children: Iterable[Term] = ()) -> Term:
        """Applies an operation symbol, checking the sorts of the children"""

        op = signature.op(op_name)
        children = tuple(children)
        if len(children) != len(op.arity):
            raise SignatureError(
                "Operation {0!r} expects {1} arguments, got {2}".format(
                    op.name, len(op.arity), len(children)
                )
            )
        for (i, (child, sort)) in enumerate(zip(children, op.arity)):
            if child.sort != sort:
                raise SortMismatch(
                    "Argument {0} of {1!r} must have sort {2!r}, not {3!r}".format(
                        i, op.name, sort, child.sort
                    )
                )
        return cls(op.name, op.coarity, children)

    @property
    def kind(self) -> str:
        """Exactly one of variable, constant or composite"""

        if self.is_variable:
            return VARIABLE
        if len(self.children) == 0:
            return CONSTANT
        return COMPOSITE

    @property
    def size(self) -> int:
        return self._size

    def depth(self) -> int:
        best = 0
        stack = [(self, 1)]
        while stack:
            node, d = stack.pop()
            best = max(best, d)
            stack.extend((c, d + 1) for c in node.children)
        return best

    def nodes(self) -> Iterator[Term]:
        """All nodes, parents before children"""

        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def variables(self) -> List[Tuple[str, str]]:
        """The (name, sort) pairs of variable occurrences, left to right"""
        return [(n.symbol, n.sort) for n in self.nodes() if n.is_variable]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Term):
            return NotImplemented

        stack = [(self, other)]
        while stack:
            a, b = stack.pop()
            if a is b:
                continue
            if (
                a._hash != b._hash
                or a.symbol != b.symbol
                or a.sort != b.sort
                or a.is_variable != b.is_variable
                or len(a.children) != len(b.children)
            ):
                return False
            stack.extend(zip(a.children, b.children))
        return True

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        from .parser import print_term

        return "Term({})".format(print_term(self))


def rebuild(term: Term, leaf: Callable[[Term], Term]) -> Term:
    """Rebuilds term bottom-up, replacing each variable leaf v by leaf(v)"""

    done: List[Term] = []
    stack: List[Tuple[Term, bool]] = [(term, False)]
    while stack:
        node, expanded = stack.pop()
        if node.is_variable:
            done.append(leaf(node))
        elif expanded or len(node.children) == 0:
            n = len(node.children)
            children = tuple(done[len(done) - n :]) if n else ()
            if n:
                del done[len(done) - n :]
            done.append(Term(node.symbol, node.sort, children))
        else:
            stack.append((node, True))
            stack.extend((c, False) for c in reversed(node.children))
    return done[0]


class GeneratorSet(SortedSet):
    """The sorted set of variables a free algebra is built on"""

    __slots__ = ("signature", "name", "_sort_of")

    def __init__(
        self,
        signature: Signature,
        variables: Iterable[Tuple[str, str]],
        name: Optional[str] = None,
    ):
        carriers: Dict[str, List[str]] = {s: [] for s in signature.sorts}
        sort_of: Dict[str, str] = {}
        for (x, s) in variables:
            signature.check_sort(s)
            if x in sort_of:
                raise SortMismatch("Variable {0!r} is declared twice".format(x))
            sort_of[x] = s
            carriers[s].append(x)

        super().__init__(carriers)
        self.signature = signature
        self.name = name
        self._sort_of = sort_of

    def sort_of(self, x: str) -> str:
        try:
            return self._sort_of[x]
        except KeyError:
            raise SortMismatch("Unknown variable {0!r}".format(x))

    def declares(self, x: str) -> bool:
        return x in self._sort_of

    @property
    def variables(self) -> List[Tuple[str, str]]:
        return list(self._sort_of.items())

    def leaf(self, x: str) -> Term:
        """The generator injection: x as a term"""
        return Term.var(x, self.sort_of(x))


class Context(object):
    """A term with exactly one occurrence of a distinguished hole variable"""

    DEFAULT_HOLE = "_"

    def __init__(self, term: Term, hole: str, hole_sort: str):
        occurrences = [v for v in term.variables() if v[0] == hole]
        if len(occurrences) != 1:
            raise SortMismatch(
                "The hole {0!r} must occur exactly once, found {1}".format(
                    hole, len(occurrences)
                )
            )
        if occurrences[0][1] != hole_sort:
            raise SortMismatch(
                "The hole {0!r} occurs at sort {1!r}, not {2!r}".format(
                    hole, occurrences[0][1], hole_sort
                )
            )

        self.term = term
        self.hole = hole
        self.hole_sort = hole_sort

    @classmethod
    def trivial(cls, sort: str, hole: str = DEFAULT_HOLE) -> Context:
        """The context consisting of the hole alone"""
        return cls(Term.var(hole, sort), hole, sort)

    @property
    def sort(self) -> str:
        """The sort of a plugged context"""
        return self.term.sort

    def plug(self, t: Term) -> Term:
        if t.sort != self.hole_sort:
            raise SortMismatch(
                "Cannot plug a term of sort {0!r} into a hole of sort {1!r}".format(
                    t.sort, self.hole_sort
                )
            )
        return rebuild(self.term, lambda v: t if v.symbol == self.hole else v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Context):
            return NotImplemented
        return (self.term, self.hole, self.hole_sort) == (
            other.term,
            other.hole,
            other.hole_sort,
        )

    def __hash__(self) -> int:
        return hash((self.term, self.hole, self.hole_sort))
