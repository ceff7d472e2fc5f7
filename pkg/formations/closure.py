"""Formation closures of bounded pools.

A formation contains the subfinal algebras and is closed under isomorphism,
homomorphic images and finite subdirect products. Within a carrier bound the
generated formation is computed by alternating both closure steps until
nothing new appears.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field

from finite_algebra.congruences import enumerate_congruences, quotient_algebra
from finite_algebra.constructions import product, product_size
from finite_algebra.generate import enumerate_algebras
from finite_algebra.subdirect import good_congruences, subdirect_witness
from sorted_core.limits import resolve
from sorted_core.operations import meet_equiv
from sorted_core.sets import SortedEquivalence

from .pools import AlgebraPool, label
from .verdicts import Verdict

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Callable, Dict, List, Optional, Tuple

    from finite_algebra.algebra import FiniteAlgebra
    from signature_terms.signature import Signature
    from sorted_core.limits import Limits

logger = logging.getLogger(__name__)

SEED = "seed"
H = "H"
PFSD = "P_fsd"

STANDARD = "standard"
SHSK = "shsk"
MODES = (STANDARD, SHSK)


@dataclass(frozen=True)
class Generation:
    """Which rule added a member, and from what"""

    step: int
    rule: str
    member: str
    origin: Optional[str] = None


@dataclass(frozen=True)
class Escape:
    """The smallest product of two members beyond the bound"""

    factors: Tuple[str, str]
    size: int
    algebra: Optional[FiniteAlgebra] = None


@dataclass
class ClosureReport:
    closed: AlgebraPool
    saturated_at_bound: bool
    generations: List[Generation] = field(default_factory=list)
    escape: Optional[Escape] = None
    rounds: int = 0


_candidates: Dict[Tuple[Signature, int, int], List[FiniteAlgebra]] = {}


def candidates(signature: Signature, bound: int, limits: Optional[Limits] = None) -> List[FiniteAlgebra]:
    """Every algebra up to the bound, one per isomorphism class, cached per signature and candidate limit"""

    limits = resolve(limits)
    key = (signature, bound, limits.max_candidates)
    if key not in _candidates:
        _candidates[key] = enumerate_algebras(signature, bound, limits=limits)
    return _candidates[key]


def _quotient_name(A: FiniteAlgebra, index: int, k: int) -> str:
    return "{}/{}".format(label(A, index), k)


def h_closure_step(
    pool: AlgebraPool,
    limits: Optional[Limits] = None,
    trace: Optional[List[Generation]] = None,
    step: int = 0,
) -> AlgebraPool:
    """Adds every quotient of every member"""

    limits = limits or pool.limits
    added: List[FiniteAlgebra] = []
    known = set(pool.keys)

    for (i, A) in enumerate(pool):
        for (k, Phi) in enumerate(enumerate_congruences(A, limits=limits)):
            Q, _ = quotient_algebra(A, Phi)
            key = pool.key(Q)
            if key in known:
                continue
            known.add(key)
            Q = Q.renamed(_quotient_name(A, i, k))
            added.append(Q)
            if trace is not None:
                trace.append(Generation(step, H, Q.name, label(A, i)))

    if not added:
        return pool
    logger.debug("H step added %d algebras", len(added))
    return pool.with_members(added)


def pfsd_closure_step(
    pool: AlgebraPool,
    limits: Optional[Limits] = None,
    trace: Optional[List[Generation]] = None,
    step: int = 0,
) -> AlgebraPool:
    """Adds every algebra within the bound that is a subdirect product of members.

    Subfinal algebras always qualify through the empty family.
    """

    limits = limits or pool.limits
    added: List[FiniteAlgebra] = []

    for C in candidates(pool.signature, pool.bound, limits=limits):
        if pool.contains(C):
            continue
        witness = subdirect_witness(C, pool.members, limits=limits)
        if witness is None:
            continue
        C = C.renamed("sd{}_{}".format("".join(str(n) for n in C.profile), len(pool) + len(added)))
        added.append(C)
        if trace is not None:
            trace.append(
                Generation(step, PFSD, C.name, "{} congruences".format(len(witness)))
            )

    if not added:
        return pool
    logger.debug("P_fsd step added %d algebras", len(added))
    return pool.with_members(added)


def find_escape(pool: AlgebraPool, limits: Optional[Limits] = None) -> Optional[Escape]:
    """The smallest full product of two members whose size exceeds the bound"""

    limits = limits or pool.limits
    best: Optional[Tuple[int, int, int]] = None
    members = pool.members
    for (i, j) in itertools.combinations_with_replacement(range(len(members)), 2):
        size = product_size([members[i], members[j]], pool.signature)
        if size > pool.bound and (best is None or size < best[0]):
            best = (size, i, j)

    if best is None:
        return None

    size, i, j = best
    A, B = members[i], members[j]
    algebra = None
    if size <= limits.max_carrier:
        algebra, _ = product([A, B], limits=limits)
    return Escape((label(A, i), label(B, j)), size, algebra)


def formation_closure(
    seed: AlgebraPool,
    limits: Optional[Limits] = None,
    on_progress: Optional[Callable[[int, int], None]] = None,
) -> ClosureReport:
    """The formation generated by seed, within the bound of seed"""

    limits = limits or seed.limits
    trace = [Generation(0, SEED, label(A, i)) for (i, A) in enumerate(seed)]

    pool = seed
    rounds = 0
    while True:
        rounds += 1
        grown = h_closure_step(pool, limits=limits, trace=trace, step=rounds)
        grown = pfsd_closure_step(grown, limits=limits, trace=trace, step=rounds)
        if on_progress is not None:
            on_progress(rounds, len(grown))
        if len(grown) == len(pool):
            break
        pool = grown

    escape = find_escape(pool, limits=limits)
    logger.info(
        "Closure reached %d algebras after %d rounds (saturated: %s)",
        len(pool),
        rounds,
        escape is None,
    )
    return ClosureReport(pool, escape is None, trace, escape, rounds)


def formation_join(P: AlgebraPool, Q: AlgebraPool, limits: Optional[Limits] = None) -> AlgebraPool:
    """The least formation containing both pools"""

    return formation_closure(P.union(Q), limits=limits).closed


def formation_meet(P: AlgebraPool, Q: AlgebraPool) -> AlgebraPool:
    return P.intersection(Q)


def _check_h(pool: AlgebraPool, verdict: Verdict, limits: Limits) -> None:
    for (i, A) in enumerate(pool):
        for Phi in enumerate_congruences(A, limits=limits):
            verdict.checked += 1
            Q, _ = quotient_algebra(A, Phi)
            if not pool.contains(Q):
                verdict.fail(
                    "H",
                    "A quotient of {} with {} elements is missing".format(
                        label(A, i), Q.total_size
                    ),
                    Q,
                )
                return


def _check_pfsd(pool: AlgebraPool, verdict: Verdict, limits: Limits) -> None:
    for C in candidates(pool.signature, pool.bound, limits=limits):
        if pool.contains(C):
            continue
        verdict.checked += 1
        if subdirect_witness(C, pool.members, limits=limits) is not None:
            verdict.fail(
                "P_fsd",
                "A subdirect product of members with {} elements is missing".format(
                    C.total_size
                ),
                C,
            )
            return


def _check_shsk(pool: AlgebraPool, verdict: Verdict, limits: Limits) -> None:
    """A/(Φ ∩ Ψ) is a member whenever A/Φ and A/Ψ are, for every A within the bound.

    Families of any finite size reduce to pairs, apart from the empty family:
    A/∇ is always subfinal and must be a member.
    """

    for A in candidates(pool.signature, pool.bound, limits=limits):
        verdict.checked += 1
        good = good_congruences(A, pool.members, limits=limits)
        Q, _ = quotient_algebra(A, SortedEquivalence.total(A.carriers))
        if not pool.contains(Q):
            verdict.fail("shsk", "A subfinal algebra is missing", Q)
            return

        for (Phi, Psi) in itertools.combinations(good, 2):
            Q, _ = quotient_algebra(A, meet_equiv(Phi, Psi))
            if not pool.contains(Q):
                verdict.fail(
                    "shsk",
                    "A quotient by the meet of two good congruences with {} elements is missing".format(
                        Q.total_size
                    ),
                    Q,
                )
                return


def is_formation(
    pool: AlgebraPool, mode: str = STANDARD, limits: Optional[Limits] = None
) -> Verdict:
    """Checks the formation conditions within the bound of pool"""

    if mode not in MODES:
        raise ValueError("Unknown mode {0!r}".format(mode))
    limits = limits or pool.limits

    verdict = Verdict("is-formation ({})".format(mode))
    if len(pool) == 0:
        verdict.fail("nonempty", "The pool is empty")
        return verdict

    # members are stored up to isomorphism, so the pool is closed under it

    _check_h(pool, verdict, limits)
    if not verdict.holds:
        return verdict

    if mode == STANDARD:
        _check_pfsd(pool, verdict, limits)
    else:
        _check_shsk(pool, verdict, limits)

    logger.info("Pool %r is a formation (%s): %s", pool.name, mode, verdict.holds)
    return verdict


def subfinal_pool(signature: Signature, bound: int, limits: Optional[Limits] = None) -> AlgebraPool:
    """The least formation: every subfinal algebra"""

    return formation_closure(AlgebraPool(signature, bound, limits=limits), limits=limits).closed
