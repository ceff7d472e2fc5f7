from __future__ import annotations

import logging

from sorted_core.operations import meet_all, meet_equiv
from sorted_core.sets import SortedEquivalence

from .algebra import compose
from .congruences import enumerate_congruences, quotient_algebra
from .isomorphism import canonical_form

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Iterable, List, Optional, Sequence

    from sorted_core.limits import Limits

    from .algebra import FiniteAlgebra, Homomorphism

logger = logging.getLogger(__name__)


def is_subdirect_embedding(f: Homomorphism, projections: Sequence[Homomorphism]) -> bool:
    """f is injective and every projection after f is surjective"""

    if not f.is_injective():
        return False
    return all(compose(p, f).is_surjective() for p in projections)


def good_congruences(
    A: FiniteAlgebra, pool: Iterable[FiniteAlgebra], limits: Optional[Limits] = None
) -> List[SortedEquivalence]:
    """The congruences of A whose quotient is isomorphic to a pool member"""

    keys = {canonical_form(B, limits=limits) for B in pool}
    good = []
    for Phi in enumerate_congruences(A, limits=limits):
        quotient, _ = quotient_algebra(A, Phi)
        if canonical_form(quotient, limits=limits) in keys:
            good.append(Phi)
    return good


def subdirect_witness(
    A: FiniteAlgebra, pool: Iterable[FiniteAlgebra], limits: Optional[Limits] = None
) -> Optional[List[SortedEquivalence]]:
    """Congruences of A meeting to Δ with every quotient in the pool, or None.

    A witness exists iff the meet of all such congruences is Δ. The empty
    family is a witness exactly when A is subfinal, but a member of the pool
    is always witnessed by {Δ}.
    """

    good = good_congruences(A, pool, limits=limits)
    delta = SortedEquivalence.identity(A.carriers)

    if meet_all(A.carriers, good) != delta:
        return None

    if delta in good:
        return [delta]
    current = SortedEquivalence.total(A.carriers)
    if current == delta:
        return []

    # keep only the congruences that make progress
    witness: List[SortedEquivalence] = []
    for Phi in good:
        if current == delta:
            break
        refined = meet_equiv(current, Phi)
        if refined != current:
            witness.append(Phi)
            current = refined

    logger.debug("Subdirect witness for %r has %d congruences", A.name, len(witness))
    return witness
