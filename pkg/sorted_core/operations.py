from __future__ import annotations

import itertools
import logging

from .errors import AmbientMismatch, RefinementViolation
from .sets import SortedEquivalence, SortedMap, SortedSet, SortedSubset

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

logger = logging.getLogger(__name__)


def support(X: Union[SortedSet, SortedSubset]) -> FrozenSet[str]:
    """The sorts at which X is nonempty"""

    if isinstance(X, SortedSubset):
        return frozenset(s for s in X.ambient.sorts if len(X.members(s)) > 0)
    return frozenset(s for (s, c) in X.items() if len(c) > 0)


def direct_image(f: SortedMap, X: SortedSubset) -> SortedSubset:
    if X.ambient != f.domain:
        raise AmbientMismatch("Subset does not live in the domain of the map")

    return SortedSubset(
        f.codomain,
        {s: {f.image(s, x) for x in X.members(s)} for s in f.domain.sorts},
    )


def inverse_image(f: SortedMap, Y: SortedSubset) -> SortedSubset:
    if Y.ambient != f.codomain:
        raise AmbientMismatch("Subset does not live in the codomain of the map")

    return SortedSubset(
        f.domain,
        {
            s: {x for x in f.domain.carrier(s) if Y.contains(s, f.image(s, x))}
            for s in f.domain.sorts
        },
    )


def kernel(f: SortedMap) -> SortedEquivalence:
    """The equivalence whose blocks are the fibres of f"""

    return SortedEquivalence.from_labels(
        f.domain,
        {s: [f.image(s, x) for x in f.domain.carrier(s)] for s in f.domain.sorts},
    )


def inverse_image_equiv(f: SortedMap, Psi: SortedEquivalence) -> SortedEquivalence:
    """Pulls Psi back along f: x ~ y iff f(x) and f(y) are Psi-related"""

    if Psi.ambient != f.codomain:
        raise AmbientMismatch("Equivalence does not live on the codomain of the map")

    return SortedEquivalence.from_labels(
        f.domain,
        {
            s: [Psi.label(s, f.image(s, x)) for x in f.domain.carrier(s)]
            for s in f.domain.sorts
        },
    )


def _check(X: SortedSubset, Phi: SortedEquivalence) -> None:
    if X.ambient != Phi.ambient:
        raise AmbientMismatch("Subset and equivalence live on different sorted sets")


def saturate(X: SortedSubset, Phi: SortedEquivalence) -> SortedSubset:
    """The union of all Phi-classes meeting X"""

    _check(X, Phi)

    members = {}
    for s in X.ambient.sorts:
        hit = {Phi.label(s, x) for x in X.members(s)}
        members[s] = [
            x for (i, block) in enumerate(Phi.blocks(s)) if i in hit for x in block
        ]
    return SortedSubset(X.ambient, members)


def is_saturated(X: SortedSubset, Phi: SortedEquivalence) -> bool:
    _check(X, Phi)

    for s in X.ambient.sorts:
        members = X.members(s)
        for block in Phi.blocks(s):
            inside = sum(1 for x in block if x in members)
            if 0 < inside < len(block):
                return False
    return True


def meet_equiv(Phi: SortedEquivalence, Psi: SortedEquivalence) -> SortedEquivalence:
    """Phi ∩ Psi, blocks are the nonempty pairwise intersections"""

    if Phi.ambient != Psi.ambient:
        raise AmbientMismatch("Equivalences on different sorted sets")

    return SortedEquivalence.from_labels(
        Phi.ambient,
        {s: list(zip(Phi.labels(s), Psi.labels(s))) for s in Phi.ambient.sorts},
    )


def meet_all(
    ambient: SortedSet, equivalences: Iterable[SortedEquivalence]
) -> SortedEquivalence:
    """The meet of a family; the empty family meets to ∇"""

    labels = {s: [()] * ambient.size(s) for s in ambient.sorts}
    for Phi in equivalences:
        if Phi.ambient != ambient:
            raise AmbientMismatch("Equivalences on different sorted sets")
        for s in ambient.sorts:
            labels[s] = [old + (new,) for (old, new) in zip(labels[s], Phi.labels(s))]
    return SortedEquivalence.from_labels(ambient, labels)


def quotient_set(
    A: SortedSet, Phi: SortedEquivalence
) -> Tuple[SortedSet, SortedMap]:
    """A/Phi with classes named by their representatives, and the projection"""

    if Phi.ambient != A:
        raise AmbientMismatch("Equivalence does not live on the given sorted set")

    quotient = SortedSet({s: [block[0] for block in Phi.blocks(s)] for s in A.sorts})
    projection = SortedMap(
        A,
        quotient,
        {s: {x: Phi.representative(s, x) for x in A.carrier(s)} for s in A.sorts},
    )
    return quotient, projection


def quotient_equiv(Psi: SortedEquivalence, Phi: SortedEquivalence) -> SortedEquivalence:
    """Psi/Phi on A/Phi; requires Phi ⊆ Psi"""

    if not Phi.refines(Psi):
        raise RefinementViolation(
            "Cannot take the quotient of an equivalence by one that does not refine it"
        )

    quotient, _ = quotient_set(Phi.ambient, Phi)
    return SortedEquivalence.from_labels(
        quotient,
        {
            s: [Psi.label(s, r) for r in quotient.carrier(s)]
            for s in quotient.sorts
        },
    )


def saturated_atoms(Phi: SortedEquivalence) -> List[SortedSubset]:
    """The atoms of the Boolean algebra of Phi-saturated sets: one delta per class"""

    return [
        SortedSubset.delta(Phi.ambient, s, block)
        for s in Phi.ambient.sorts
        for block in Phi.blocks(s)
    ]


def saturated_subsets(Phi: SortedEquivalence) -> Iterator[SortedSubset]:
    """Every Phi-saturated subset, as a union of atoms"""

    atoms = saturated_atoms(Phi)
    empty = SortedSubset.empty(Phi.ambient)
    for mask in itertools.product((False, True), repeat=len(atoms)):
        result = empty
        for (chosen, atom) in zip(mask, atoms):
            if chosen:
                result = result.union(atom)
        yield result


def subsets(ambient: SortedSet) -> Iterator[SortedSubset]:
    """Every subset of ambient"""

    yield from saturated_subsets(SortedEquivalence.identity(ambient))


def tuple_name(components: Sequence[str]) -> str:
    return "<{}>".format(",".join(components))


def product_set(
    factors: Sequence[SortedSet], sorts: Optional[Sequence[str]] = None
) -> Tuple[SortedSet, List[SortedMap]]:
    """The cartesian product of sorted sets with its projections.

    With no factors the product is the one-point sorted set over sorts.
    """

    if sorts is None:
        if len(factors) == 0:
            raise AmbientMismatch("The empty product needs an explicit list of sorts")
        sorts = factors[0].sorts
    for F in factors:
        if set(F.sorts) != set(sorts):
            raise AmbientMismatch("Factors of a product must share their sorts")

    tuples = {
        s: list(itertools.product(*(F.carrier(s) for F in factors))) for s in sorts
    }
    product = SortedSet({s: [tuple_name(t) for t in ts] for (s, ts) in tuples.items()})

    projections = [
        SortedMap(
            product,
            F,
            {s: {tuple_name(t): t[i] for t in ts} for (s, ts) in tuples.items()},
        )
        for (i, F) in enumerate(factors)
    ]

    logger.debug("Product of %d factors has sizes %r", len(factors), product.sizes())
    return product, projections


def hom_set_empty(A: SortedSet, B: SortedSet) -> bool:
    """True when no sorted map A -> B exists, i.e. supp(A) is not within supp(B)"""

    return not support(A) <= support(B)
