from __future__ import annotations

import logging

from sorted_core.errors import AmbientMismatch, BoundExceeded
from sorted_core.limits import resolve
from sorted_core.operations import hom_set_empty
from sorted_core.sets import SortedMap

from .algebra import FiniteAlgebra, Homomorphism

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Dict, Iterator, List, Optional, Tuple

    from sorted_core.limits import Limits

logger = logging.getLogger(__name__)

ALL = "all"
MONO = "mono"
EPI = "epi"
ISO = "iso"

FILTERS = (ALL, MONO, EPI, ISO)


def search_space(A: FiniteAlgebra, B: FiniteAlgebra) -> int:
    """The number of sorted maps from A to B"""

    total = 1
    for s in A.signature.sorts:
        total *= B.size(s) ** A.size(s)
    return total


def iter_homs(
    A: FiniteAlgebra, B: FiniteAlgebra, limits: Optional[Limits] = None
) -> Iterator[Homomorphism]:
    """Yields all homomorphisms A -> B in lexicographic order of their images"""

    if A.signature != B.signature:
        raise AmbientMismatch("Homomorphisms need a common signature")

    if hom_set_empty(A.carriers, B.carriers):
        return

    limits = resolve(limits)
    space = search_space(A, B)
    if space > limits.max_homs:
        raise BoundExceeded(
            "Homomorphism search over {} maps exceeds the bound {}".format(
                space, limits.max_homs
            ),
            limits.max_homs,
        )

    # the elements of A in a fixed order, and for every table entry the
    # step after which all its elements have an image
    order: List[Tuple[str, str]] = [
        (s, x) for s in A.signature.sorts for x in A.carriers.carrier(s)
    ]
    step: Dict[Tuple[str, str], int] = {key: k for (k, key) in enumerate(order)}

    entries: List[List[Tuple[str, Tuple[str, ...], str]]] = [[] for _ in order]
    for op in A.signature.ops:
        for (args, value) in A.tables[op.name].items():
            keys = [(s, a) for (s, a) in zip(op.arity, args)] + [(op.coarity, value)]
            last = max(step[key] for key in keys)
            entries[last].append((op.name, args, value))

    images: Dict[Tuple[str, str], str] = {}

    def consistent(k: int) -> bool:
        for (name, args, value) in entries[k]:
            op = A.signature.op(name)
            mapped = tuple(images[(s, a)] for (s, a) in zip(op.arity, args))
            if B.apply(name, mapped) != images[(op.coarity, value)]:
                return False
        return True

    def search(k: int) -> Iterator[Homomorphism]:
        if k == len(order):
            mapping = SortedMap(
                A.carriers,
                B.carriers,
                {
                    s: {x: images[(s, x)] for x in A.carriers.carrier(s)}
                    for s in A.signature.sorts
                },
            )
            yield Homomorphism(A, B, mapping)
            return

        (s, x) = order[k]
        for y in B.carriers.carrier(s):
            images[(s, x)] = y
            if consistent(k):
                yield from search(k + 1)
        del images[(s, x)]

    yield from search(0)


def enumerate_homs(
    A: FiniteAlgebra,
    B: FiniteAlgebra,
    kind: str = ALL,
    limits: Optional[Limits] = None,
) -> List[Homomorphism]:
    """All homomorphisms A -> B, optionally only the mono-, epi- or isomorphisms"""

    if kind not in FILTERS:
        raise ValueError("Unknown homomorphism filter {0!r}".format(kind))

    # cheap rejections by size
    if kind in (MONO, ISO) and any(A.size(s) > B.size(s) for s in A.signature.sorts):
        return []
    if kind in (EPI, ISO) and any(A.size(s) < B.size(s) for s in A.signature.sorts):
        return []

    found = []
    for f in iter_homs(A, B, limits=limits):
        if kind in (MONO, ISO) and not f.is_injective():
            continue
        if kind in (EPI, ISO) and not f.is_surjective():
            continue
        found.append(f)

    logger.debug("Found %d %s homomorphisms %r -> %r", len(found), kind, A.name, B.name)
    return found
