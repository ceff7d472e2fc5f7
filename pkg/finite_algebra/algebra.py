"""Finite algebras over a signature, and homomorphisms between them.

An algebra stores one table per operation symbol, mapping argument tuples to
values. Tables are also available in a dense form indexed by the positions of
the arguments in their carriers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from sorted_core.errors import AmbientMismatch, InvalidAlgebra, SortMismatch
from sorted_core.sets import SortedMap, SortedSet
from sorted_core.sets import compose as compose_maps

from .errors import NotAHomomorphism

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Callable, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

    from signature_terms.signature import OperationSymbol, Signature

    Table = Dict[Tuple[str, ...], str]


@dataclass(frozen=True)
class Diagnostic:
    """One problem found by validate"""

    message: str
    op: Optional[str] = None
    args: Optional[Tuple[str, ...]] = None

    def __str__(self) -> str:
        if self.op is None:
            return self.message
        if self.args is None:
            return "{}: {}".format(self.op, self.message)
        return "{}({}): {}".format(self.op, " ".join(self.args), self.message)


@dataclass(frozen=True)
class DenseTable:
    """An operation table over carrier positions, indexed in mixed radix"""

    radices: Tuple[int, ...]
    values: Tuple[int, ...]

    def lookup(self, positions: Sequence[int]) -> int:
        index = 0
        for (r, p) in zip(self.radices, positions):
            index = index * r + p
        return self.values[index]


class FiniteAlgebra(object):
    """A signature, finite carriers, and a total table for every operation"""

    def __init__(
        self,
        signature: Signature,
        carriers: SortedSet,
        tables: Mapping[str, Mapping[Tuple[str, ...], str]],
        name: Optional[str] = None,
    ):
        self.signature = signature
        self.carriers = carriers
        self.tables: Dict[str, Table] = {
            op: {tuple(k): v for (k, v) in table.items()} for (op, table) in tables.items()
        }
        self.name = name

        self._dense: Dict[str, DenseTable] = {}
        self._hash: Optional[int] = None
        self._canonical = None

    @classmethod
    def from_functions(
        cls,
        signature: Signature,
        carriers: Mapping[str, Sequence[str]],
        functions: Mapping[str, Callable[..., str]],
        name: Optional[str] = None,
    ) -> FiniteAlgebra:
        """Builds the tables by calling functions[op](*args) on every argument tuple"""

        sorted_carriers = SortedSet({s: carriers.get(s, ()) for s in signature.sorts})
        tables = {}
        for op in signature.ops:
            tables[op.name] = {
                args: functions[op.name](*args)
                for args in itertools.product(
                    *(sorted_carriers.carrier(s) for s in op.arity)
                )
            }
        return cls(signature, sorted_carriers, tables, name=name)

    def argument_tuples(self, op: OperationSymbol) -> Iterator[Tuple[str, ...]]:
        """All argument tuples of op, in carrier order"""
        return itertools.product(*(self.carriers.carrier(s) for s in op.arity))

    def apply(self, op_name: str, args: Sequence[str]) -> str:
        try:
            return self.tables[op_name][tuple(args)]
        except KeyError:
            raise SortMismatch(
                "{0!r} is not defined on ({1})".format(op_name, " ".join(args))
            )

    def dense(self, op_name: str) -> DenseTable:
        if op_name not in self._dense:
            op = self.signature.op(op_name)
            table = self.tables[op_name]
            self._dense[op_name] = DenseTable(
                tuple(self.carriers.size(s) for s in op.arity),
                tuple(
                    self.carriers.position(op.coarity, table[args])
                    for args in self.argument_tuples(op)
                ),
            )
        return self._dense[op_name]

    def size(self, sort: str) -> int:
        return self.carriers.size(sort)

    @property
    def total_size(self) -> int:
        return self.carriers.total_size

    @property
    def profile(self) -> Tuple[int, ...]:
        """The carrier sizes in signature sort order"""
        return tuple(self.carriers.size(s) for s in self.signature.sorts)

    def renamed(self, name: Optional[str]) -> FiniteAlgebra:
        return FiniteAlgebra(self.signature, self.carriers, self.tables, name=name)

    def check(self) -> FiniteAlgebra:
        """Returns self if it validates, raises InvalidAlgebra otherwise"""

        diagnostics = validate(self)
        if diagnostics:
            raise InvalidAlgebra(
                "Algebra {0!r} is invalid: {1}".format(self.name, diagnostics[0]),
                diagnostics,
            )
        return self

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteAlgebra):
            return NotImplemented
        return (
            self.signature == other.signature
            and self.carriers == other.carriers
            and self.tables == other.tables
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(
                (
                    self.signature,
                    self.carriers,
                    tuple(
                        (op, tuple(sorted(table.items())))
                        for (op, table) in sorted(self.tables.items())
                    ),
                )
            )
        return self._hash

    def __repr__(self) -> str:
        return "FiniteAlgebra({!r}, sizes={})".format(self.name, self.carriers.sizes())


def validate(A: FiniteAlgebra) -> List[Diagnostic]:
    """Checks every invariant of A. Never raises; returns the problems found"""

    diagnostics: List[Diagnostic] = []
    sig = A.signature

    if set(A.carriers.sorts) != set(sig.sorts):
        diagnostics.append(
            Diagnostic(
                "Carriers are declared for sorts {} but the signature has sorts {}".format(
                    sorted(A.carriers.sorts), list(sig.sorts)
                )
            )
        )
        return diagnostics

    for name in A.tables:
        if not sig.has_op(name):
            diagnostics.append(Diagnostic("Table for an undeclared operation", op=name))

    for op in sig.ops:
        table = A.tables.get(op.name)
        if table is None:
            diagnostics.append(Diagnostic("Missing table", op=op.name))
            continue

        if op.is_nullary and A.carriers.size(op.coarity) == 0:
            diagnostics.append(
                Diagnostic(
                    "Nullary operation into the empty carrier of sort {0!r}".format(
                        op.coarity
                    ),
                    op=op.name,
                )
            )
            continue

        expected = set(A.argument_tuples(op))
        for args in A.argument_tuples(op):
            if args not in table:
                diagnostics.append(Diagnostic("Missing table entry", op=op.name, args=args))
            elif not A.carriers.contains(op.coarity, table[args]):
                diagnostics.append(
                    Diagnostic(
                        "Value {0!r} is not in the carrier of sort {1!r}".format(
                            table[args], op.coarity
                        ),
                        op=op.name,
                        args=args,
                    )
                )
        for args in table:
            if args not in expected:
                diagnostics.append(
                    Diagnostic(
                        "Arguments are not in the carriers of the arity",
                        op=op.name,
                        args=args,
                    )
                )

    return diagnostics


def final_algebra(signature: Signature) -> FiniteAlgebra:
    """The final algebra: one point at every sort"""

    from .constructions import product

    algebra, _ = product([], signature=signature)
    return algebra


def is_subfinal(A: FiniteAlgebra) -> bool:
    """At most one element per sort"""
    return all(A.size(s) <= 1 for s in A.signature.sorts)


@dataclass(frozen=True)
class Homomorphism:
    """A sorted map between the carriers of two algebras commuting with all tables"""

    source: FiniteAlgebra
    target: FiniteAlgebra
    mapping: SortedMap

    @classmethod
    def build(
        cls,
        source: FiniteAlgebra,
        target: FiniteAlgebra,
        images: Mapping[str, Mapping[str, str]],
    ) -> Homomorphism:
        """Builds and checks a homomorphism from per-sort image tables"""

        f = cls(source, target, SortedMap(source.carriers, target.carriers, images))
        problem = f.violation()
        if problem is not None:
            raise NotAHomomorphism(problem)
        return f

    @classmethod
    def identity(cls, A: FiniteAlgebra) -> Homomorphism:
        return cls(A, A, SortedMap.identity(A.carriers))

    def image(self, sort: str, element: str) -> str:
        return self.mapping.image(sort, element)

    def violation(self) -> Optional[str]:
        """Describes the first table entry f does not commute with, or None"""

        if self.source.signature != self.target.signature:
            return "Source and target have different signatures"

        for op in self.source.signature.ops:
            for (args, value) in self.source.tables[op.name].items():
                mapped = tuple(self.image(s, a) for (s, a) in zip(op.arity, args))
                if self.image(op.coarity, value) != self.target.apply(op.name, mapped):
                    return "Does not commute with {}({})".format(op.name, " ".join(args))
        return None

    def is_injective(self) -> bool:
        return self.mapping.is_injective()

    def is_surjective(self) -> bool:
        return self.mapping.is_surjective()

    def is_isomorphism(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def __repr__(self) -> str:
        return "Homomorphism({!r} -> {!r}: {!r})".format(
            self.source.name, self.target.name, self.mapping
        )


def compose(after: Homomorphism, before: Homomorphism) -> Homomorphism:
    """after ∘ before"""

    if before.target != after.source:
        raise AmbientMismatch("Cannot compose homomorphisms with mismatched ends")
    return Homomorphism(before.source, after.target, compose_maps(after.mapping, before.mapping))
