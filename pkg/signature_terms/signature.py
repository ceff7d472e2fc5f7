from __future__ import annotations

from dataclasses import dataclass

from sorted_core.errors import SortMismatch

from .errors import SignatureError

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Dict, Iterable, List, Optional, Sequence, Tuple


@dataclass(frozen=True)
class OperationSymbol:
    """A formal operation name: arity word -> coarity"""

    name: str
    arity: Tuple[str, ...]
    coarity: str

    @property
    def is_nullary(self) -> bool:
        return len(self.arity) == 0

    def __str__(self) -> str:
        return "{}: ({}) -> {}".format(self.name, " ".join(self.arity), self.coarity)


class Signature(object):
    """A finite set of sorts together with the operation symbols over them"""

    def __init__(
        self,
        sorts: Sequence[str],
        ops: Iterable[OperationSymbol],
        name: Optional[str] = None,
    ):
        self.name = name
        self.sorts: Tuple[str, ...] = tuple(sorts)
        self.ops: Tuple[OperationSymbol, ...] = tuple(ops)

        if len(self.sorts) == 0:
            raise SignatureError("A signature needs at least one sort")
        if len(set(self.sorts)) != len(self.sorts):
            raise SignatureError("Sort names must be pairwise distinct")
        for s in self.sorts:
            if not isinstance(s, str) or s == "":
                raise SignatureError("Sort names must be nonempty strings")

        self._by_name: Dict[str, OperationSymbol] = {}
        for op in self.ops:
            if op.name in self._by_name:
                raise SignatureError("Duplicate operation symbol {0!r}".format(op.name))
            for s in op.arity + (op.coarity,):
                if s not in self.sorts:
                    raise SignatureError(
                        "Operation {0!r} uses undeclared sort {1!r}".format(op.name, s)
                    )
            self._by_name[op.name] = op

    @classmethod
    def build(
        cls,
        sorts: Sequence[str],
        ops: Iterable[Tuple[str, Sequence[str], str]],
        name: Optional[str] = None,
    ) -> Signature:
        """Shorthand taking (name, arity, coarity) triples"""

        return cls(
            sorts,
            [OperationSymbol(n, tuple(arity), coarity) for (n, arity, coarity) in ops],
            name=name,
        )

    def op(self, name: str) -> OperationSymbol:
        try:
            return self._by_name[name]
        except KeyError:
            raise SignatureError("Unknown operation symbol {0!r}".format(name))

    def has_op(self, name: str) -> bool:
        return name in self._by_name

    def check_sort(self, sort: str) -> None:
        if sort not in self.sorts:
            raise SortMismatch("Sort {0!r} is not declared in the signature".format(sort))

    def ops_into(self, sort: str) -> List[OperationSymbol]:
        return [op for op in self.ops if op.coarity == sort]

    @property
    def nullary_ops(self) -> List[OperationSymbol]:
        return [op for op in self.ops if op.is_nullary]

    @property
    def proper_ops(self) -> List[OperationSymbol]:
        """The operations with nonempty arity"""
        return [op for op in self.ops if not op.is_nullary]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Signature):
            return NotImplemented
        return self.sorts == other.sorts and self.ops == other.ops

    def __hash__(self) -> int:
        return hash((self.sorts, self.ops))

    def __repr__(self) -> str:
        return "Signature({!r}, sorts={}, ops=[{}])".format(
            self.name, list(self.sorts), ", ".join(str(op) for op in self.ops)
        )
