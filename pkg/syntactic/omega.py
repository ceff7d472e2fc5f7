"""The greatest congruence saturating a subset, by partition refinement.

Starting from the partition {L_s, A_s - L_s} at every sort, elements are
regrouped by signature vectors (current class, class of every elementary
translation image) until nothing splits any more.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from sorted_core.errors import AmbientMismatch
from sorted_core.operations import meet_all, meet_equiv, subsets
from sorted_core.sets import SortedEquivalence, SortedSubset
from translations.translations import (
    enumerate_translations_as_functions,
    inverse_image_translation,
    iter_elementary,
)

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Dict, FrozenSet, List, Optional, Tuple

    from finite_algebra.algebra import FiniteAlgebra
    from sorted_core.limits import Limits

logger = logging.getLogger(__name__)


def characteristic_kernel(L: SortedSubset) -> SortedEquivalence:
    """Ker(ch^L): two classes per sort, members and non-members, empty ones dropped"""

    return SortedEquivalence.from_labels(
        L.ambient,
        {s: [L.contains(s, x) for x in c] for (s, c) in L.ambient.items()},
    )


def omega_finite(A: FiniteAlgebra, L: SortedSubset) -> SortedEquivalence:
    if L.ambient != A.carriers:
        raise AmbientMismatch("Subset does not live on the carriers of the algebra")

    sorts = A.signature.sorts
    carriers = A.carriers

    # the elementary translations as position vectors, grouped by hole sort
    vectors: Dict[str, List[Tuple[str, Tuple[int, ...]]]] = {s: [] for s in sorts}
    for E in iter_elementary(A):
        t, s = E.source_sort, E.target_sort
        vectors[t].append(
            (s, tuple(carriers.position(s, E(x)) for x in carriers.carrier(t)))
        )

    Phi = characteristic_kernel(L)
    rounds = 0
    while True:
        rounds += 1
        keys = {}
        for t in sorts:
            labels = Phi.labels(t)
            keys[t] = [
                (labels[p],) + tuple(Phi.labels(s)[v[p]] for (s, v) in vectors[t])
                for p in range(carriers.size(t))
            ]
        refined = SortedEquivalence.from_labels(carriers, keys)
        if refined.total_index == Phi.total_index:
            break
        Phi = refined

    logger.debug(
        "Refinement for %r stabilised after %d rounds with %d classes",
        A.name,
        rounds,
        Phi.total_index,
    )
    return Phi


@dataclass(frozen=True)
class ClassDescription:
    """The class of a described by the contexts that accept and reject it"""

    positive: Tuple[FrozenSet[str], ...]
    negative: Tuple[FrozenSet[str], ...]
    reconstructed: FrozenSet[str]


def class_description(
    A: FiniteAlgebra,
    L: SortedSubset,
    t: str,
    a: str,
    limits: Optional[Limits] = None,
) -> ClassDescription:
    """Reconstructs [a] as ⋂(positive sets) - ⋃(negative sets).

    The sets are the distinct T^{-1}[L_s] for translations T with hole sort t,
    positive when T(a) ∈ L_s and negative otherwise.
    """

    if L.ambient != A.carriers:
        raise AmbientMismatch("Subset does not live on the carriers of the algebra")
    A.carriers.position(t, a)

    positive: List[FrozenSet[str]] = []
    negative: List[FrozenSet[str]] = []
    for (s, Ts) in enumerate_translations_as_functions(A, t, limits=limits).items():
        for T in Ts:
            X = inverse_image_translation(T, L).members(t)
            target = positive if L.contains(s, T(a)) else negative
            if X not in target:
                target.append(X)

    reconstructed = frozenset(A.carriers.carrier(t))
    for X in positive:
        reconstructed &= X
    for X in negative:
        reconstructed -= X

    return ClassDescription(tuple(positive), tuple(negative), reconstructed)


def recover_congruence(A: FiniteAlgebra, Phi: SortedEquivalence) -> SortedEquivalence:
    """The meet of omega_finite(A, δ^{s,[a]}) over all classes [a] of Phi"""

    omegas = [
        omega_finite(A, SortedSubset.delta(A.carriers, s, block))
        for s in A.signature.sorts
        for block in Phi.blocks(s)
    ]
    return meet_all(A.carriers, omegas)


@dataclass(frozen=True)
class IsotoneReport:
    """Whether omega is isotone, and whether it turns intersections into meets"""

    isotone: bool
    meet_preserving: bool
    # a pair of subsets violating the respective property, if any
    isotone_witness: Optional[Tuple[SortedSubset, SortedSubset]] = None
    meet_witness: Optional[Tuple[SortedSubset, SortedSubset]] = None


def isotone_report(A: FiniteAlgebra) -> IsotoneReport:
    """Checks both properties on all pairs of subsets.

    Pairs suffice for intersections: finite families reduce to pairs, and the
    empty family gives omega(A) = ∇ in any case.
    """

    all_subsets = list(subsets(A.carriers))
    omegas = {L: omega_finite(A, L) for L in all_subsets}

    isotone_witness = None
    meet_witness = None
    for L in all_subsets:
        for M in all_subsets:
            if isotone_witness is None and L.issubset(M) and not omegas[L].refines(omegas[M]):
                isotone_witness = (L, M)
            if meet_witness is None and omegas[L.intersection(M)] != meet_equiv(
                omegas[L], omegas[M]
            ):
                meet_witness = (L, M)

    return IsotoneReport(
        isotone=isotone_witness is None,
        meet_preserving=meet_witness is None,
        isotone_witness=isotone_witness,
        meet_witness=meet_witness,
    )


def is_isotone(A: FiniteAlgebra) -> bool:
    return isotone_report(A).isotone


def meet_preserving(A: FiniteAlgebra) -> bool:
    return isotone_report(A).meet_preserving
