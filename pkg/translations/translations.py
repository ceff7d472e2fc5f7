"""Elementary translations and their compositions on a finite algebra.

An elementary translation is one operation with all arguments but one frozen.
A translation is a nonempty chain of them, or the identity at a sort.
"""

from __future__ import annotations

import itertools
import logging
from collections import deque

from sorted_core.errors import AmbientMismatch, BoundExceeded, NoPreimage, SortMismatch
from sorted_core.limits import resolve
from sorted_core.sets import SortedSubset

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Deque, Dict, Iterator, List, Optional, Tuple

    from finite_algebra.algebra import FiniteAlgebra, Homomorphism
    from signature_terms.signature import OperationSymbol
    from sorted_core.limits import Limits
    from sorted_core.sets import SortedEquivalence

logger = logging.getLogger(__name__)

HOLE = "□"


class ElementaryTranslation(object):
    """x -> F_op(a_0, ..., x, ..., a_n) with x at position hole"""

    __slots__ = ("algebra", "op", "hole", "frozen")

    def __init__(
        self,
        algebra: FiniteAlgebra,
        op: OperationSymbol,
        hole: int,
        frozen: Tuple[Optional[str], ...],
    ):
        if op.is_nullary:
            raise SortMismatch("Nullary operations have no translations")
        if not 0 <= hole < len(op.arity) or len(frozen) != len(op.arity):
            raise SortMismatch("Hole position does not fit the arity of {0!r}".format(op.name))

        for (j, (a, s)) in enumerate(zip(frozen, op.arity)):
            if j == hole:
                if a is not None:
                    raise SortMismatch("The hole position must not hold an element")
            elif not algebra.carriers.contains(s, a):
                raise SortMismatch(
                    "Frozen argument {0!r} is not in the carrier of sort {1!r}".format(a, s)
                )

        self.algebra = algebra
        self.op = op
        self.hole = hole
        self.frozen = tuple(frozen)

    @property
    def source_sort(self) -> str:
        return self.op.arity[self.hole]

    @property
    def target_sort(self) -> str:
        return self.op.coarity

    def __call__(self, x: str) -> str:
        args = self.frozen[: self.hole] + (x,) + self.frozen[self.hole + 1 :]
        return self.algebra.apply(self.op.name, args)

    def describe(self) -> str:
        args = [HOLE if j == self.hole else a for (j, a) in enumerate(self.frozen)]
        return "{}({})".format(self.op.name, ",".join(args))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ElementaryTranslation):
            return NotImplemented
        return (self.op, self.hole, self.frozen) == (other.op, other.hole, other.frozen)

    def __hash__(self) -> int:
        return hash((self.op, self.hole, self.frozen))

    def __repr__(self) -> str:
        return "ElementaryTranslation({})".format(self.describe())


class Translation(object):
    """T = T_{n-1} ∘ ... ∘ T_0 for a nonempty chain of elementary translations"""

    def __init__(self, algebra: FiniteAlgebra, chain: Tuple[ElementaryTranslation, ...]):
        chain = tuple(chain)
        if len(chain) == 0:
            raise SortMismatch("A chain needs at least one step; use IdentityTranslation")
        for (before, after) in zip(chain, chain[1:]):
            if before.target_sort != after.source_sort:
                raise SortMismatch(
                    "Cannot compose {} after {}: sorts do not match".format(
                        after.describe(), before.describe()
                    )
                )

        self.algebra = algebra
        self.chain = chain
        self._vector: Optional[Tuple[str, ...]] = None

    @property
    def source_sort(self) -> str:
        return self.chain[0].source_sort

    @property
    def target_sort(self) -> str:
        return self.chain[-1].target_sort

    @property
    def is_identity(self) -> bool:
        return False

    def __call__(self, x: str) -> str:
        for step in self.chain:
            x = step(x)
        return x

    def then(self, step: ElementaryTranslation) -> Translation:
        """step ∘ self"""
        return Translation(self.algebra, self.chain + (step,))

    @property
    def vector(self) -> Tuple[str, ...]:
        """The induced function, as images of the source carrier in order"""

        if self._vector is None:
            self._vector = tuple(self(x) for x in self.algebra.carriers.carrier(self.source_sort))
        return self._vector

    def describe(self) -> str:
        text = HOLE
        for step in self.chain:
            text = step.describe().replace(HOLE, text)
        return text

    def __repr__(self) -> str:
        return "Translation({})".format(self.describe())


class IdentityTranslation(Translation):
    """The identity at a sort, adjoined to the chains"""

    def __init__(self, algebra: FiniteAlgebra, sort: str):
        algebra.signature.check_sort(sort)
        self.algebra = algebra
        self.chain = ()
        self.sort = sort
        self._vector = None

    @property
    def source_sort(self) -> str:
        return self.sort

    @property
    def target_sort(self) -> str:
        return self.sort

    @property
    def is_identity(self) -> bool:
        return True

    def __call__(self, x: str) -> str:
        return x

    def then(self, step: ElementaryTranslation) -> Translation:
        if step.source_sort != self.sort:
            raise SortMismatch("Cannot compose {} after the identity at {!r}".format(step.describe(), self.sort))
        return Translation(self.algebra, (step,))


def apply(T: Translation, x: str) -> str:
    return T(x)


def _check_bound(A: FiniteAlgebra, limits: Limits) -> None:
    if A.total_size > limits.max_carrier:
        raise BoundExceeded(
            "Translation enumeration needs total carrier size at most {}".format(
                limits.max_carrier
            ),
            limits.max_carrier,
        )


def iter_elementary(A: FiniteAlgebra, t: Optional[str] = None) -> Iterator[ElementaryTranslation]:
    """Every elementary translation of A, optionally only those with hole sort t"""

    for op in A.signature.proper_ops:
        for (i, s) in enumerate(op.arity):
            if t is not None and s != t:
                continue
            others = [
                A.carriers.carrier(w) if j != i else (None,) for (j, w) in enumerate(op.arity)
            ]
            for frozen in itertools.product(*others):
                yield ElementaryTranslation(A, op, i, frozen)


def enumerate_elementary(
    A: FiniteAlgebra, t: str, limits: Optional[Limits] = None
) -> Dict[str, List[ElementaryTranslation]]:
    """The t-elementary translations, grouped by target sort"""

    _check_bound(A, resolve(limits))
    A.signature.check_sort(t)

    result: Dict[str, List[ElementaryTranslation]] = {s: [] for s in A.signature.sorts}
    for E in iter_elementary(A, t):
        result[E.target_sort].append(E)
    return result


def enumerate_translations_as_functions(
    A: FiniteAlgebra, t: str, limits: Optional[Limits] = None
) -> Dict[str, List[Translation]]:
    """One translation per distinct function A_t -> A_s, grouped by s.

    Breadth first, so every function is represented by a shortest chain.
    """

    _check_bound(A, resolve(limits))
    A.signature.check_sort(t)

    by_source: Dict[str, List[ElementaryTranslation]] = {s: [] for s in A.signature.sorts}
    for E in iter_elementary(A):
        by_source[E.source_sort].append(E)

    identity = IdentityTranslation(A, t)
    seen: Dict[Tuple[str, Tuple[str, ...]], Translation] = {(t, identity.vector): identity}
    queue: Deque[Translation] = deque([identity])

    while queue:
        T = queue.popleft()
        for E in by_source[T.target_sort]:
            U = T.then(E)
            key = (U.target_sort, U.vector)
            if key not in seen:
                seen[key] = U
                queue.append(U)

    result: Dict[str, List[Translation]] = {s: [] for s in A.signature.sorts}
    for ((s, _), T) in seen.items():
        result[s].append(T)

    logger.debug("%d translation functions with hole sort %r", len(seen), t)
    return result


def transport(f: Homomorphism, T: Translation) -> Translation:
    """T^f on the target of f, with f(T(x)) = T^f(f(x))"""

    if T.algebra != f.source:
        raise AmbientMismatch("Translation does not live on the source of the homomorphism")

    if T.is_identity:
        return IdentityTranslation(f.target, T.source_sort)

    steps = []
    for step in T.chain:
        frozen = tuple(
            None if j == step.hole else f.image(s, a)
            for (j, (a, s)) in enumerate(zip(step.frozen, step.op.arity))
        )
        steps.append(ElementaryTranslation(f.target, step.op, step.hole, frozen))
    return Translation(f.target, tuple(steps))


def _least_preimage(f: Homomorphism, sort: str, b: str) -> str:
    for a in f.source.carriers.carrier(sort):
        if f.image(sort, a) == b:
            return a
    raise NoPreimage("{0!r} of sort {1!r} has no preimage".format(b, sort), sort, b)


def lift_translation(f: Homomorphism, U: Translation) -> Translation:
    """Some T on the source of f with T^f = U, using least-index preimages"""

    if U.algebra != f.target:
        raise AmbientMismatch("Translation does not live on the target of the homomorphism")

    if U.is_identity:
        return IdentityTranslation(f.source, U.source_sort)

    steps = []
    for step in U.chain:
        frozen = tuple(
            None if j == step.hole else _least_preimage(f, s, b)
            for (j, (b, s)) in enumerate(zip(step.frozen, step.op.arity))
        )
        steps.append(ElementaryTranslation(f.source, step.op, step.hole, frozen))
    return Translation(f.source, tuple(steps))


def inverse_image_translation(T: Translation, L: SortedSubset) -> SortedSubset:
    """T^{-1}[L_s] as a delta at the hole sort"""

    if L.ambient != T.algebra.carriers:
        raise AmbientMismatch("Subset does not live on the algebra of the translation")

    t = T.source_sort
    members = [
        x
        for (x, y) in zip(T.algebra.carriers.carrier(t), T.vector)
        if L.contains(T.target_sort, y)
    ]
    return SortedSubset.delta(L.ambient, t, members)


def is_closed_under_translations(
    A: FiniteAlgebra,
    Phi: SortedEquivalence,
    elementary_only: bool = True,
    limits: Optional[Limits] = None,
) -> bool:
    """Decides whether every (elementary) translation maps classes into classes"""

    if Phi.ambient != A.carriers:
        raise AmbientMismatch("Equivalence does not live on the carriers of the algebra")

    if elementary_only:
        _check_bound(A, resolve(limits))
        translations = list(iter_elementary(A))
        functions = [
            (E.source_sort, E.target_sort, tuple(E(x) for x in A.carriers.carrier(E.source_sort)))
            for E in translations
        ]
    else:
        functions = []
        for t in A.signature.sorts:
            for (s, Ts) in enumerate_translations_as_functions(A, t, limits=limits).items():
                functions.extend((t, s, T.vector) for T in Ts)

    for (t, s, vector) in functions:
        images: Dict[int, int] = {}
        for (label, y) in zip(Phi.labels(t), vector):
            if images.setdefault(label, Phi.label(s, y)) != Phi.label(s, y):
                return False
    return True
