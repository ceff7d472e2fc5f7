from __future__ import annotations

import itertools
import logging

from sorted_core.errors import BoundExceeded
from sorted_core.limits import resolve
from sorted_core.sets import SortedSet

from .algebra import FiniteAlgebra
from .isomorphism import canonical_form

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Dict, Iterator, List, Optional, Tuple

    from signature_terms.signature import Signature
    from sorted_core.limits import Limits

logger = logging.getLogger(__name__)


def profiles(signature: Signature, bound: int) -> Iterator[Tuple[int, ...]]:
    """Carrier size profiles with total at most bound, smaller totals first"""

    sorts = signature.sorts
    for total in range(bound + 1):
        for profile in itertools.product(range(total + 1), repeat=len(sorts)):
            if sum(profile) != total:
                continue
            # constants need somewhere to land
            if any(profile[sorts.index(op.coarity)] == 0 for op in signature.nullary_ops):
                continue
            yield profile


def count_tables(signature: Signature, profile: Tuple[int, ...]) -> int:
    """The number of raw table choices for one profile"""

    sizes = dict(zip(signature.sorts, profile))
    total = 1
    for op in signature.ops:
        inputs = 1
        for s in op.arity:
            inputs *= sizes[s]
        total *= sizes[op.coarity] ** inputs
    return total


def enumerate_algebras(
    signature: Signature, bound: int, limits: Optional[Limits] = None
) -> List[FiniteAlgebra]:
    """One representative of every isomorphism class of algebras with total carrier at most bound.

    Carriers are named "0", "1", ...; results come ordered by profile and canonical key.
    """

    limits = resolve(limits)

    candidates = sum(count_tables(signature, p) for p in profiles(signature, bound))
    if candidates > limits.max_candidates:
        raise BoundExceeded(
            "Generating algebras up to size {} needs {} candidate tables, more than {}".format(
                bound, candidates, limits.max_candidates
            ),
            limits.max_candidates,
        )

    found: Dict[tuple, FiniteAlgebra] = {}
    for profile in profiles(signature, bound):
        carriers = SortedSet(
            {s: [str(i) for i in range(n)] for (s, n) in zip(signature.sorts, profile)}
        )

        # every op gets every function from its argument tuples to its coarity
        choices = []
        for op in signature.ops:
            inputs = list(itertools.product(*(carriers.carrier(s) for s in op.arity)))
            outputs = carriers.carrier(op.coarity)
            choices.append(
                [dict(zip(inputs, values)) for values in itertools.product(outputs, repeat=len(inputs))]
            )

        for tables in itertools.product(*choices):
            A = FiniteAlgebra(
                signature, carriers, {op.name: t for (op, t) in zip(signature.ops, tables)}
            )
            key = canonical_form(A, limits=limits.override(max_carrier=max(bound, limits.max_carrier)))
            found.setdefault(key, A)

    logger.info("Found %d algebras up to size %d out of %d candidates", len(found), bound, candidates)
    return [found[k] for k in sorted(found)]
