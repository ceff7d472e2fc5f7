from __future__ import annotations

import itertools
import logging

from sorted_core import operations
from sorted_core.errors import AmbientMismatch, BoundExceeded, RefinementViolation
from sorted_core.limits import resolve
from sorted_core.partitions import UnionFind, restricted_growth
from sorted_core.sets import SortedEquivalence

from .algebra import FiniteAlgebra, Homomorphism
from .errors import NotACongruence

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

    from signature_terms.signature import OperationSymbol
    from sorted_core.limits import Limits

logger = logging.getLogger(__name__)

# congruences are sorted equivalences that happen to be compatible
Congruence = SortedEquivalence


def _compatible(
    A: FiniteAlgebra, op: OperationSymbol, labels: Mapping[str, Sequence[int]]
) -> bool:
    """Checks op against a labelling of the carriers at its arity and coarity.

    Changing one argument within its class must not change the class of the
    value; by transitivity this covers all related argument tuples.
    """

    dense = A.dense(op.name)
    coarity = labels[op.coarity]

    # the first position of every class, per arity sort
    firsts: List[List[int]] = []
    for s in op.arity:
        first: Dict[int, int] = {}
        rep = []
        for (p, label) in enumerate(labels[s]):
            rep.append(first.setdefault(label, p))
        firsts.append(rep)

    for (index, args) in enumerate(_positions(dense.radices)):
        value = coarity[dense.values[index]]
        for (i, p) in enumerate(args):
            r = firsts[i][p]
            if r != p:
                moved = args[:i] + (r,) + args[i + 1 :]
                if coarity[dense.lookup(moved)] != value:
                    return False
    return True


def _positions(radices: Sequence[int]):
    """Position tuples in mixed-radix order"""

    return itertools.product(*(range(r) for r in radices))


def is_congruence(A: FiniteAlgebra, Phi: SortedEquivalence) -> bool:
    """Decides compatibility with every operation of nonempty arity.

    Nullary operations impose no condition.
    """

    if Phi.ambient != A.carriers:
        raise AmbientMismatch("Equivalence does not live on the carriers of the algebra")

    labels = {s: Phi.labels(s) for s in A.signature.sorts}
    return all(_compatible(A, op, labels) for op in A.signature.proper_ops)


def _check_bound(A: FiniteAlgebra, limits: Limits, what: str) -> None:
    if A.total_size > limits.max_carrier:
        raise BoundExceeded(
            "{} needs total carrier size at most {}, {!r} has {}".format(
                what, limits.max_carrier, A.name, A.total_size
            ),
            limits.max_carrier,
        )


def enumerate_congruences(
    A: FiniteAlgebra, limits: Optional[Limits] = None
) -> List[SortedEquivalence]:
    """All congruences of A, in the canonical order of their labellings"""

    limits = resolve(limits)
    _check_bound(A, limits, "Congruence enumeration")

    sorts = A.signature.sorts
    ops = A.signature.proper_ops

    # an op becomes checkable once all its sorts have a partition
    checkable: Dict[int, List[OperationSymbol]] = {k: [] for k in range(len(sorts))}
    for op in ops:
        needed = max(sorts.index(s) for s in op.arity + (op.coarity,))
        checkable[needed].append(op)

    found: List[SortedEquivalence] = []
    labels: Dict[str, Tuple[int, ...]] = {}

    def search(k: int) -> None:
        if k == len(sorts):
            found.append(SortedEquivalence.from_labels(A.carriers, labels))
            return
        for choice in restricted_growth(A.size(sorts[k])):
            labels[sorts[k]] = choice
            if all(_compatible(A, op, labels) for op in checkable[k]):
                search(k + 1)
        del labels[sorts[k]]

    search(0)
    logger.debug("Algebra %r has %d congruences", A.name, len(found))
    return found


def congruence_generated(
    A: FiniteAlgebra, pairs: Iterable[Tuple[str, str, str]]
) -> SortedEquivalence:
    """The least congruence containing every (sort, x, y) pair"""

    uf = UnionFind()
    for (s, x, y) in pairs:
        A.carriers.position(s, x)
        A.carriers.position(s, y)
        uf.union((s, x), (s, y))

    changed = True
    while changed:
        changed = False
        for op in A.signature.proper_ops:
            for (args, value) in A.tables[op.name].items():
                for (i, s) in enumerate(op.arity):
                    rep = uf.find((s, args[i]))[1]
                    if rep == args[i]:
                        continue
                    moved = args[:i] + (rep,) + args[i + 1 :]
                    if uf.union((op.coarity, value), (op.coarity, A.apply(op.name, moved))):
                        changed = True

    return uf.to_equivalence(A.carriers)


def quotient_algebra(
    A: FiniteAlgebra, Phi: SortedEquivalence
) -> Tuple[FiniteAlgebra, Homomorphism]:
    """A/Phi with elements named by class representatives, and the projection"""

    if not is_congruence(A, Phi):
        raise NotACongruence("Cannot take the quotient by an equivalence that is not a congruence")

    carriers, projection = operations.quotient_set(A.carriers, Phi)
    tables = {}
    for op in A.signature.ops:
        tables[op.name] = {
            args: Phi.representative(op.coarity, A.apply(op.name, args))
            for args in _tuples(carriers, op.arity)
        }

    quotient = FiniteAlgebra(A.signature, carriers, tables)
    return quotient, Homomorphism(A, quotient, projection)


def _tuples(carriers, arity):
    return itertools.product(*(carriers.carrier(s) for s in arity))


def kernel(f: Homomorphism) -> SortedEquivalence:
    return operations.kernel(f.mapping)


def universal_factor(f: Homomorphism, Phi: SortedEquivalence) -> Homomorphism:
    """The unique p: A/Phi -> B with p ∘ pr = f, for Phi within Ker(f)"""

    if not Phi.refines(kernel(f)):
        raise RefinementViolation("The congruence does not refine the kernel of the homomorphism")

    quotient, _ = quotient_algebra(f.source, Phi)
    return Homomorphism.build(
        quotient,
        f.target,
        {
            s: {r: f.image(s, r) for r in quotient.carriers.carrier(s)}
            for s in quotient.signature.sorts
        },
    )


def factor_map(
    A: FiniteAlgebra, Phi: SortedEquivalence, Psi: SortedEquivalence
) -> Homomorphism:
    """The canonical A/Phi -> A/Psi for Phi ⊆ Psi"""

    _, projection = quotient_algebra(A, Psi)
    return universal_factor(projection, Phi)
