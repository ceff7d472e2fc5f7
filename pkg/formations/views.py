"""A pool of algebras seen as congruences on free algebras, and as languages.

A finite index congruence on a free algebra is given by an onto presentation;
it belongs to the congruence view when its quotient is a pool member. A
regular language belongs to the language view when its syntactic algebra is.
"""

from __future__ import annotations

import itertools
import logging

from finite_algebra.algebra import final_algebra
from finite_algebra.congruences import enumerate_congruences
from sorted_core.sets import SortedMap
from syntactic.recognizers import (
    Presentation,
    kernel_key,
    meet_presentation,
    syntactic_quotient,
)

from .verdicts import Verdict

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Dict, List, Optional

    from signature_terms.terms import GeneratorSet
    from sorted_core.limits import Limits
    from syntactic.recognizers import KernelKey, Recognizer

    from .pools import AlgebraPool

logger = logging.getLogger(__name__)


def nabla_kernel(generators: GeneratorSet) -> Presentation:
    """The presentation of the total congruence, onto the final algebra"""

    final = final_algebra(generators.signature)
    assign = SortedMap(
        generators,
        final.carriers,
        {s: {x: final.carriers.carrier(s)[0] for x in generators.carrier(s)} for s in generators.sorts},
    )
    return Presentation(generators, final, assign).corestricted()


def congruence_formation_query(
    pool: AlgebraPool,
    generators: GeneratorSet,
    quotient_bound: Optional[int] = None,
) -> List[Presentation]:
    """Every kernel of an onto assignment of the generators into a pool member.

    Members larger than quotient_bound are skipped. Kernels are listed once
    each, in pool order.
    """

    if generators.signature != pool.signature:
        raise ValueError("Generators and pool use different signatures")
    bound = pool.bound if quotient_bound is None else min(quotient_bound, pool.bound)

    found: Dict[KernelKey, Presentation] = {}
    variables = generators.variables
    for B in pool:
        if B.total_size > bound:
            continue
        # no assignment exists when a generator's sort is empty in B
        for images in itertools.product(*(B.carriers.carrier(s) for (_, s) in variables)):
            assign = SortedMap(
                generators,
                B.carriers,
                {
                    s: {x: b for ((x, t), b) in zip(variables, images) if t == s}
                    for s in generators.sorts
                },
            )
            P = Presentation(generators, B, assign)
            if not P.is_epi():
                continue
            found.setdefault(kernel_key(P), P)

    logger.debug(
        "%d kernels over %r with quotients in %r", len(found), generators.name, pool.name
    )
    return list(found.values())


class CongruenceFormationView(object):
    """The congruence formation of a pool, materialised per generator set"""

    def __init__(self, pool: AlgebraPool, quotient_bound: Optional[int] = None):
        self.pool = pool
        self.quotient_bound = quotient_bound
        self._kernels: Dict[GeneratorSet, List[Presentation]] = {}

    def kernels(self, generators: GeneratorSet) -> List[Presentation]:
        if generators not in self._kernels:
            self._kernels[generators] = congruence_formation_query(
                self.pool, generators, self.quotient_bound
            )
        return self._kernels[generators]

    def keys(self, generators: GeneratorSet) -> Dict[KernelKey, Presentation]:
        return {kernel_key(P): P for P in self.kernels(generators)}

    def contains(self, P: Presentation) -> bool:
        """Whether the kernel of P belongs to the formation"""
        return self.pool.contains(P.image())


def filter_laws_check(
    view: CongruenceFormationView, generators: GeneratorSet, limits: Optional[Limits] = None
) -> Verdict:
    """The queried kernels contain ∇ and are closed under meets and coarsening"""

    limits = limits or view.pool.limits
    verdict = Verdict("filter-laws")
    keys = view.keys(generators)

    top = nabla_kernel(generators)
    verdict.checked += 1
    if kernel_key(top) not in keys:
        verdict.fail("top", "The total congruence is missing", top.algebra)

    kernels = list(keys.values())
    for (P, Q) in itertools.combinations(kernels, 2):
        M = meet_presentation(P, Q)
        # the reachable product is onto, so its size is the size of the quotient
        if M.algebra.total_size > view.pool.bound:
            gap = "The meet of two kernels has {} classes, beyond the bound {}".format(
                M.algebra.total_size, view.pool.bound
            )
            if gap not in verdict.gaps:
                verdict.gaps.append(gap)
            continue
        verdict.checked += 1
        if kernel_key(M) not in keys:
            verdict.fail(
                "meet",
                "The meet of two kernels has a quotient with {} elements outside the pool".format(
                    M.algebra.total_size
                ),
                M.algebra,
            )
            break

    for P in kernels:
        done = False
        for Psi in enumerate_congruences(P.algebra, limits=limits):
            verdict.checked += 1
            C = P.quotient(Psi)
            if kernel_key(C) not in keys:
                verdict.fail(
                    "coarsening",
                    "A coarser kernel with {} classes is missing".format(C.algebra.total_size),
                    C.algebra,
                )
                done = True
                break
        if done:
            break

    return verdict


def language_formation_membership(pool: AlgebraPool, R: Recognizer) -> bool:
    return pool.contains(syntactic_quotient(R).quotient)


class LanguageFormationView(object):
    """The language formation of a pool"""

    def __init__(self, pool: AlgebraPool):
        self.pool = pool
        self._cache: Dict[Recognizer, bool] = {}

    def contains(self, R: Recognizer) -> bool:
        if R not in self._cache:
            self._cache[R] = language_formation_membership(self.pool, R)
        return self._cache[R]
