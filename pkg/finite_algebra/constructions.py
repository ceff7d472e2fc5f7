from __future__ import annotations

import itertools
import logging
from functools import reduce
from operator import mul

from sorted_core import operations
from sorted_core.errors import AmbientMismatch, BoundExceeded, SortMismatch
from sorted_core.limits import resolve
from sorted_core.sets import SortedMap, SortedSet, SortedSubset

from .algebra import FiniteAlgebra, Homomorphism

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Dict, List, Optional, Sequence, Set, Tuple

    from signature_terms.signature import Signature
    from sorted_core.limits import Limits

logger = logging.getLogger(__name__)


def product_size(algebras: Sequence[FiniteAlgebra], signature: Signature) -> int:
    """Total carrier size of the product, without building it"""

    return sum(
        reduce(mul, (A.size(s) for A in algebras), 1) for s in signature.sorts
    )


def product(
    algebras: Sequence[FiniteAlgebra],
    signature: Optional[Signature] = None,
    limits: Optional[Limits] = None,
) -> Tuple[FiniteAlgebra, List[Homomorphism]]:
    """The direct product with its projections.

    The empty product is the final algebra and needs an explicit signature.
    """

    if signature is None:
        if len(algebras) == 0:
            raise AmbientMismatch("The empty product needs an explicit signature")
        signature = algebras[0].signature
    for A in algebras:
        if A.signature != signature:
            raise AmbientMismatch("Factors of a product must share their signature")

    # the final algebra is always allowed
    if len(algebras) > 0:
        limits = resolve(limits)
        size = product_size(algebras, signature)
        if size > limits.max_carrier:
            raise BoundExceeded(
                "Product has total carrier size {}, more than {}".format(
                    size, limits.max_carrier
                ),
                limits.max_carrier,
            )

    carriers, projections = operations.product_set(
        [A.carriers for A in algebras], sorts=signature.sorts
    )

    tables = {}
    for op in signature.ops:
        table = {}
        for args in _tuples(carriers, op.arity):
            components = [
                tuple(p.image(s, a) for (s, a) in zip(op.arity, args))
                for p in projections
            ]
            value = operations.tuple_name(
                [A.apply(op.name, c) for (A, c) in zip(algebras, components)]
            )
            table[args] = value
        tables[op.name] = table

    name = None
    if all(A.name for A in algebras):
        name = "x".join(A.name for A in algebras) if algebras else "1"

    P = FiniteAlgebra(signature, carriers, tables, name=name)
    return P, [Homomorphism(P, A, p) for (A, p) in zip(algebras, projections)]


def _tuples(carriers: SortedSet, arity: Sequence[str]):
    return itertools.product(*(carriers.carrier(s) for s in arity))


def subalgebra_generated(A: FiniteAlgebra, X: SortedSubset) -> SortedSubset:
    """The least subset containing X and the constants, closed under the tables"""

    if X.ambient != A.carriers:
        raise AmbientMismatch("Generators do not lie in the carriers of the algebra")

    members: Dict[str, Set[str]] = {s: set(X.members(s)) for s in A.signature.sorts}
    for op in A.signature.nullary_ops:
        members[op.coarity].add(A.apply(op.name, ()))

    changed = True
    while changed:
        changed = False
        for op in A.signature.proper_ops:
            current = [[x for x in A.carriers.carrier(s) if x in members[s]] for s in op.arity]
            for args in itertools.product(*current):
                value = A.apply(op.name, args)
                if value not in members[op.coarity]:
                    members[op.coarity].add(value)
                    changed = True

    return SortedSubset(A.carriers, members)


def is_closed(A: FiniteAlgebra, X: SortedSubset) -> bool:
    return subalgebra_generated(A, X) == X


def restrict(A: FiniteAlgebra, X: SortedSubset, name: Optional[str] = None) -> FiniteAlgebra:
    """The subalgebra of A on a closed subset X, keeping the carrier order"""

    if not is_closed(A, X):
        raise SortMismatch("The subset is not closed under the operations")

    carriers = SortedSet({s: X.ordered(s) for s in A.signature.sorts})
    tables = {
        op.name: {args: A.apply(op.name, args) for args in _tuples(carriers, op.arity)}
        for op in A.signature.ops
    }
    return FiniteAlgebra(A.signature, carriers, tables, name=name)


def inclusion(B: FiniteAlgebra, A: FiniteAlgebra) -> Homomorphism:
    """The inclusion of a subalgebra B of A"""

    return Homomorphism(
        B,
        A,
        SortedMap(
            B.carriers,
            A.carriers,
            {s: {x: x for x in B.carriers.carrier(s)} for s in B.signature.sorts},
        ),
    )


def image(f: Homomorphism) -> FiniteAlgebra:
    """The image of f as a subalgebra of its target"""

    full = SortedSubset.full(f.source.carriers)
    return restrict(f.target, operations.direct_image(f.mapping, full))


def corestrict(f: Homomorphism) -> Homomorphism:
    """f as a surjection onto its image"""

    B = image(f)
    return Homomorphism(
        f.source,
        B,
        SortedMap(
            f.source.carriers,
            B.carriers,
            {s: f.mapping.table(s) for s in f.source.signature.sorts},
        ),
    )
