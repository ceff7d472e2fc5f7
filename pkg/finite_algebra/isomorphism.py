"""Isomorphism-invariant keys for finite algebras.

Elements are first coloured by refinement over the operation tables, then
every ordering compatible with the colours is tried and the least encoding of
the tables wins. Two algebras over one signature are isomorphic iff their
keys agree, and matching the canonical orderings gives an isomorphism.
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter

from sorted_core.errors import BoundExceeded
from sorted_core.limits import resolve
from sorted_core.sets import SortedMap

from .algebra import FiniteAlgebra, Homomorphism

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Dict, List, Optional, Tuple

    from sorted_core.limits import Limits

    Key = Tuple[Tuple[int, ...], Tuple[Tuple[int, ...], ...]]

logger = logging.getLogger(__name__)


def refine_colours(A: FiniteAlgebra) -> Dict[str, List[int]]:
    """Colours every element by its role in the tables, stable under renaming"""

    sig = A.signature
    sorts = sig.sorts

    # start from the sort and the constants an element is the value of
    initial = {}
    for s in sorts:
        initial[s] = [
            (
                sorts.index(s),
                tuple(
                    A.apply(op.name, ()) == x for op in sig.nullary_ops if op.coarity == s
                ),
            )
            for x in A.carriers.carrier(s)
        ]
    colours = _renumber(initial)

    while True:
        entries: Dict[str, List[list]] = {s: [[] for _ in range(A.size(s))] for s in sorts}
        for (k, op) in enumerate(sig.proper_ops):
            dense = A.dense(op.name)
            seen: Dict[Tuple[str, int, int], Counter] = {}
            for (index, args) in enumerate(
                itertools.product(*(range(r) for r in dense.radices))
            ):
                arg_colours = tuple(colours[s][p] for (s, p) in zip(op.arity, args))
                value = colours[op.coarity][dense.values[index]]
                for (i, (s, p)) in enumerate(zip(op.arity, args)):
                    seen.setdefault((s, p, i), Counter())[(arg_colours, value)] += 1
            for ((s, p, i), counter) in seen.items():
                entries[s][p].append((k, i, tuple(sorted(counter.items()))))

        refined = _renumber(
            {
                s: [
                    (colours[s][p], tuple(sorted(entries[s][p])))
                    for p in range(A.size(s))
                ]
                for s in sorts
            }
        )
        if _classes(refined) == _classes(colours):
            return refined
        colours = refined


def _renumber(raw: Dict[str, list]) -> Dict[str, List[int]]:
    """Replaces each value by its rank among all values of its sort"""

    result = {}
    for (s, values) in raw.items():
        ranks = {v: r for (r, v) in enumerate(sorted(set(values)))}
        result[s] = [ranks[v] for v in values]
    return result


def _classes(colours: Dict[str, List[int]]) -> int:
    return sum(len(set(c)) for c in colours.values())


def _encode(A: FiniteAlgebra, order: Dict[str, Tuple[int, ...]]) -> Tuple[Tuple[int, ...], ...]:
    """The tables of A under a relabelling; order[s][k] is the old position of new k"""

    sig = A.signature
    new_of = {s: {old: new for (new, old) in enumerate(order[s])} for s in sig.sorts}

    encoded = []
    for op in sig.ops:
        dense = A.dense(op.name)
        encoded.append(
            tuple(
                new_of[op.coarity][dense.lookup([order[s][p] for (s, p) in zip(op.arity, args)])]
                for args in itertools.product(*(range(A.size(s)) for s in op.arity))
            )
        )
    return tuple(encoded)


def canonical_labelling(
    A: FiniteAlgebra, limits: Optional[Limits] = None
) -> Tuple[Key, Dict[str, Tuple[str, ...]]]:
    """Returns the canonical key of A and the carriers in canonical order"""

    limits = resolve(limits)
    if A.total_size > limits.max_carrier:
        raise BoundExceeded(
            "Canonical form needs total carrier size at most {}".format(limits.max_carrier),
            limits.max_carrier,
        )

    if A._canonical is not None:
        return A._canonical

    sorts = A.signature.sorts
    colours = refine_colours(A)

    # per sort, the classes of equal colour in colour order
    blocks: List[List[int]] = []
    block_sort: List[str] = []
    for s in sorts:
        for c in sorted(set(colours[s])):
            blocks.append([p for p in range(A.size(s)) if colours[s][p] == c])
            block_sort.append(s)

    best: Optional[Tuple[Tuple[int, ...], ...]] = None
    best_order: Optional[Dict[str, Tuple[int, ...]]] = None
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        order: Dict[str, List[int]] = {s: [] for s in sorts}
        for (s, perm) in zip(block_sort, choice):
            order[s].extend(perm)
        frozen = {s: tuple(o) for (s, o) in order.items()}
        encoded = _encode(A, frozen)
        if best is None or encoded < best:
            best, best_order = encoded, frozen

    key = (A.profile, best)
    elements = {
        s: tuple(A.carriers.carrier(s)[p] for p in best_order[s]) for s in sorts
    }
    A._canonical = (key, elements)
    return key, elements


def canonical_form(A: FiniteAlgebra, limits: Optional[Limits] = None) -> Key:
    """An isomorphism invariant key: equal keys iff isomorphic"""

    key, _ = canonical_labelling(A, limits=limits)
    return key


def are_isomorphic(
    A: FiniteAlgebra, B: FiniteAlgebra, limits: Optional[Limits] = None
) -> Optional[Homomorphism]:
    """Returns an isomorphism A -> B, or None if there is none"""

    if A.signature != B.signature or A.profile != B.profile:
        return None

    key_a, order_a = canonical_labelling(A, limits=limits)
    key_b, order_b = canonical_labelling(B, limits=limits)
    if key_a != key_b:
        return None

    mapping = SortedMap(
        A.carriers,
        B.carriers,
        {s: dict(zip(order_a[s], order_b[s])) for s in A.signature.sorts},
    )
    return Homomorphism(A, B, mapping)
