"""Bounded sets of finite algebras, taken up to isomorphism"""

from __future__ import annotations

from finite_algebra.isomorphism import canonical_form
from sorted_core.errors import AmbientMismatch, BoundExceeded
from sorted_core.limits import resolve

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Dict, Iterable, Iterator, List, Optional

    from finite_algebra.algebra import FiniteAlgebra
    from finite_algebra.isomorphism import Key
    from signature_terms.signature import Signature
    from sorted_core.limits import Limits


class AlgebraPool(object):
    """Algebras over one signature with total carrier at most bound.

    No two members are isomorphic; members are ordered by canonical key, so
    smaller profiles come first. When an isomorphism class is added twice the
    first algebra (and its name) is kept.
    """

    def __init__(
        self,
        signature: Signature,
        bound: int,
        members: Iterable[FiniteAlgebra] = (),
        name: Optional[str] = None,
        limits: Optional[Limits] = None,
    ):
        self.signature = signature
        self.bound = bound
        self.name = name
        self.limits = resolve(limits)

        found: Dict[Key, FiniteAlgebra] = {}
        for A in members:
            if A.signature != signature:
                raise AmbientMismatch(
                    "Algebra {0!r} does not use the signature of the pool".format(A.name)
                )
            if A.total_size > bound:
                raise BoundExceeded(
                    "Algebra {0!r} has total carrier size {1}, more than {2}".format(
                        A.name, A.total_size, bound
                    ),
                    bound,
                    witness=A,
                )
            A.check()
            found.setdefault(self.key(A), A)

        if len(found) > self.limits.max_algebras:
            raise BoundExceeded(
                "Pool would hold {} algebras, more than {}".format(
                    len(found), self.limits.max_algebras
                ),
                self.limits.max_algebras,
            )

        self._members: Dict[Key, FiniteAlgebra] = {k: found[k] for k in sorted(found)}

    def key(self, A: FiniteAlgebra) -> Key:
        """The canonical key of A, computed within the carrier bound of the pool"""

        return canonical_form(
            A, limits=self.limits.override(max_carrier=max(self.bound, self.limits.max_carrier))
        )

    @property
    def members(self) -> List[FiniteAlgebra]:
        return list(self._members.values())

    @property
    def keys(self) -> List[Key]:
        return list(self._members)

    def __len__(self) -> int:
        return len(self._members)

    def __iter__(self) -> Iterator[FiniteAlgebra]:
        return iter(self._members.values())

    def contains(self, A: FiniteAlgebra) -> bool:
        """Membership up to isomorphism"""

        if A.signature != self.signature or A.total_size > self.bound:
            return False
        return self.key(A) in self._members

    def __contains__(self, A: FiniteAlgebra) -> bool:
        return self.contains(A)

    def find(self, A: FiniteAlgebra) -> Optional[FiniteAlgebra]:
        """The member isomorphic to A, if any"""

        if not self.contains(A):
            return None
        return self._members[self.key(A)]

    def _derive(self, members: Iterable[FiniteAlgebra], name: Optional[str] = None) -> AlgebraPool:
        return AlgebraPool(self.signature, self.bound, members, name=name, limits=self.limits)

    def _check(self, other: AlgebraPool) -> None:
        if other.signature != self.signature:
            raise AmbientMismatch("Pools over different signatures")

    def with_members(self, members: Iterable[FiniteAlgebra]) -> AlgebraPool:
        return self._derive(self.members + list(members), name=self.name)

    def union(self, other: AlgebraPool) -> AlgebraPool:
        self._check(other)
        return self._derive(self.members + [A for A in other if A.total_size <= self.bound])

    def intersection(self, other: AlgebraPool) -> AlgebraPool:
        self._check(other)
        return self._derive([A for A in self if other.contains(A)])

    def without(self, A: FiniteAlgebra) -> AlgebraPool:
        """The pool with the isomorphism class of A removed"""

        key = self.key(A) if A.total_size <= self.bound else None
        return self._derive([B for (k, B) in self._members.items() if k != key])

    def issubset(self, other: AlgebraPool) -> bool:
        self._check(other)
        return all(other.contains(A) for A in self)

    def names(self) -> List[str]:
        return [label(A, i) for (i, A) in enumerate(self)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraPool):
            return NotImplemented
        return (
            self.signature == other.signature
            and self.bound == other.bound
            and self.keys == other.keys
        )

    def __hash__(self) -> int:
        return hash((self.signature, self.bound, tuple(self.keys)))

    def __repr__(self) -> str:
        return "AlgebraPool({!r}, bound={}, members=[{}])".format(
            self.name, self.bound, ", ".join(self.names())
        )


def label(A: FiniteAlgebra, index: int) -> str:
    """A display name; anonymous algebras get one from their sizes and position"""

    if A.name:
        return A.name
    return "A{}_{}".format("".join(str(n) for n in A.profile), index)
