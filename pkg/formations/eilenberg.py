"""Bounded checks that the three views of a formation determine each other.

Algebras to congruences and back, and congruences to languages and back, are
verified on the generator sets given as samples. Members that no sample
reaches are reported as gaps, not as failures.
"""

from __future__ import annotations

import itertools
import logging

from signature_terms.free import Substitution, enumerate_terms, evaluate_substitution
from signature_terms.terms import Context, Term
from sorted_core.limits import resolve
from sorted_core.operations import subsets
from sorted_core.sets import SortedEquivalence, SortedSubset
from syntactic.omega import class_description, omega_finite, recover_congruence
from syntactic.recognizers import (
    COMPLEMENT,
    INTERSECTION,
    UNION,
    Presentation,
    Recognizer,
    kernel_key,
    lang_boolean,
    lang_inverse_hom,
    lang_inverse_translation,
    syntactic_quotient,
)

from .pools import label
from .verdicts import Budget, Verdict
from .views import (
    CongruenceFormationView,
    LanguageFormationView,
    filter_laws_check,
    nabla_kernel,
)

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Dict, Iterator, List, Optional, Sequence, Tuple

    from signature_terms.terms import GeneratorSet
    from sorted_core.limits import Limits

    from .pools import AlgebraPool

logger = logging.getLogger(__name__)

BPS_AXIOMS = ("BPS1", "BPS2", "BPS3", "BPS4")


def _gens_name(generators: GeneratorSet) -> str:
    return generators.name or "generators"


def theta_roundtrip(
    pool: AlgebraPool,
    samples: Sequence[GeneratorSet],
    limits: Optional[Limits] = None,
) -> Verdict:
    """Algebras to congruences and back.

    Every queried kernel has its quotient in the pool, every member is the
    quotient of some kernel, and the queried kernels form a filter.
    """

    limits = limits or pool.limits
    view = CongruenceFormationView(pool)
    verdict = Verdict("theta")
    reached = set()

    for generators in samples:
        for P in view.kernels(generators):
            verdict.checked += 1
            if not pool.contains(P.image()):
                verdict.fail(
                    "quotient",
                    "A kernel over {} has its quotient outside the pool".format(
                        _gens_name(generators)
                    ),
                    P.image(),
                )
            reached.add(pool.key(P.algebra))

        laws = filter_laws_check(view, generators, limits=limits)
        verdict.checked += laws.checked
        verdict.failures.extend(laws.failures)
        for gap in laws.gaps:
            if gap not in verdict.gaps:
                verdict.gaps.append(gap)

    for (i, B) in enumerate(pool):
        if pool.key(B) not in reached:
            verdict.gaps.append(
                "{} is not generated by any sampled generator set".format(label(B, i))
            )

    logger.info("theta roundtrip on %r: %s, %d gaps", pool.name, verdict.holds, len(verdict.gaps))
    return verdict


def _class_languages(P: Presentation) -> Iterator[Tuple[str, str, Recognizer]]:
    """One recognizer per class of the kernel of P, with the sort and element"""

    for s in P.algebra.signature.sorts:
        for b in P.algebra.carriers.carrier(s):
            yield s, b, Recognizer(
                P.generators,
                P.algebra,
                P.assign,
                SortedSubset.delta(P.algebra.carriers, s, [b]),
            )


def vartheta_roundtrip(
    pool: AlgebraPool,
    samples: Sequence[GeneratorSet],
    sample_budget: Optional[int] = None,
    limits: Optional[Limits] = None,
) -> Verdict:
    """Congruences to languages and back.

    Every queried kernel is the meet of the syntactic congruences of its class
    languages, and every language it saturates is a member. Every member
    language found this way has its syntactic congruence among the kernels.
    """

    limits = limits or pool.limits
    budget = Budget(resolve(limits).sample_budget if sample_budget is None else sample_budget)
    congruences = CongruenceFormationView(pool)
    languages = LanguageFormationView(pool)
    verdict = Verdict("vartheta")

    for generators in samples:
        keys = congruences.keys(generators)
        for P in keys.values():
            B = P.algebra

            # the kernel is recovered from its classes
            if not budget.spend():
                verdict.partial = True
                return verdict
            verdict.checked += 1
            delta = SortedEquivalence.identity(B.carriers)
            if recover_congruence(B, delta) != delta:
                verdict.fail(
                    "recover", "The class languages do not separate the kernel", B
                )
            for (s, b, R) in _class_languages(P):
                described = class_description(B, R.accept, s, b, limits=limits)
                if described.reconstructed != frozenset(omega_finite(B, R.accept).block_of(s, b)):
                    verdict.fail(
                        "describe",
                        "The contexts of {!r} do not describe its class".format(b),
                        R,
                    )
                if not languages.contains(R):
                    verdict.fail(
                        "class-language",
                        "The language of the class of {!r} is not a member".format(b),
                        R,
                    )

            # every saturated language is a member, and comes back as a kernel
            for M in subsets(B.carriers):
                if not budget.spend():
                    verdict.partial = True
                    return verdict
                verdict.checked += 1
                R = Recognizer(P.generators, B, P.assign, M)
                if not languages.contains(R):
                    verdict.fail(
                        "saturated",
                        "A language saturated by a kernel with quotient {} is not a member".format(
                            B.name
                        ),
                        R,
                    )
                    continue
                if kernel_key(syntactic_quotient(R).presentation) not in keys:
                    verdict.fail(
                        "syntactic-kernel",
                        "The syntactic congruence of a member language is not a kernel",
                        R,
                    )

    logger.info("vartheta roundtrip on %r: %s", pool.name, verdict.holds)
    return verdict


def _member_languages(
    pool: AlgebraPool, generators: GeneratorSet, budget: Budget
) -> List[Recognizer]:
    """Languages saturated by the queried kernels, at most one budget's worth"""

    found: List[Recognizer] = []
    for P in CongruenceFormationView(pool).kernels(generators):
        for M in subsets(P.algebra.carriers):
            if not budget.spend():
                return found
            found.append(Recognizer(P.generators, P.algebra, P.assign, M))
    return found


def _contexts(generators: GeneratorSet, depth: int) -> List[Context]:
    """One-hole contexts with one or two operations above the hole"""

    sig = generators.signature
    fillers = enumerate_terms(sig, generators, depth)
    hole = "□"

    one_step: List[Context] = []
    for op in sig.proper_ops:
        for (i, t) in enumerate(op.arity):
            others = [fillers[s] if j != i else [Term.var(hole, t)] for (j, s) in enumerate(op.arity)]
            for children in itertools.product(*others):
                one_step.append(Context(Term(op.name, op.coarity, tuple(children)), hole, t))

    two_steps = [
        Context(outer.plug(inner.term), hole, inner.hole_sort)
        for (outer, inner) in itertools.product(one_step, one_step)
        if outer.hole_sort == inner.sort
    ]
    return one_step + two_steps


def _substitutions(generators: GeneratorSet, depth: int) -> Iterator[Substitution]:
    fillers = enumerate_terms(generators.signature, generators, depth)
    variables = generators.variables
    for images in itertools.product(*(fillers[s] for (_, s) in variables)):
        yield Substitution(generators, generators, {x: t for ((x, _), t) in zip(variables, images)})


def bps_axioms_check(
    pool: AlgebraPool,
    generators: GeneratorSet,
    sample_budget: Optional[int] = None,
    limits: Optional[Limits] = None,
    depth: int = 1,
) -> Dict[str, Verdict]:
    """The four closure axioms of a language formation, on sampled members.

    BPS1: every language saturated by ∇ is a member.
    BPS2: inverse images under translations of members are members.
    BPS3: members are closed under the Boolean operations.
    BPS4: inverse images under substitutions are members, whenever the
    substitution followed by the syntactic presentation is onto.
    """

    limits = limits or pool.limits
    budget = Budget(resolve(limits).sample_budget if sample_budget is None else sample_budget)
    languages = LanguageFormationView(pool)
    verdicts = {name: Verdict(name) for name in BPS_AXIOMS}

    def check(axiom: str, R: Recognizer, message: str) -> bool:
        if not budget.spend():
            verdicts[axiom].partial = True
            return False
        quotient = syntactic_quotient(R).quotient
        if quotient.total_size > pool.bound:
            gap = "A syntactic algebra with {} elements lies beyond the bound {}".format(
                quotient.total_size, pool.bound
            )
            if gap not in verdicts[axiom].gaps:
                verdicts[axiom].gaps.append(gap)
            return True
        verdicts[axiom].checked += 1
        if not pool.contains(quotient):
            verdicts[axiom].fail(axiom, message, R)
        return True

    top = nabla_kernel(generators)
    for M in subsets(top.algebra.carriers):
        R = Recognizer(generators, top.algebra, top.assign, M)
        if not check("BPS1", R, "A language saturated by the total congruence is not a member"):
            break

    members = [R for R in _member_languages(pool, generators, budget) if languages.contains(R)]

    contexts = _contexts(generators, depth)
    for (R, C) in itertools.product(members, contexts):
        if not check("BPS2", lang_inverse_translation(R, C), "An inverse translation image is not a member"):
            break

    for R in members:
        if not check("BPS3", lang_boolean(COMPLEMENT, R), "A complement is not a member"):
            break
    for (R1, R2) in itertools.combinations(members, 2):
        if not check("BPS3", lang_boolean(UNION, R1, R2), "A union is not a member"):
            break
        if not check("BPS3", lang_boolean(INTERSECTION, R1, R2), "An intersection is not a member"):
            break

    for R in members:
        syn = syntactic_quotient(R).presentation
        for g in _substitutions(generators, depth + 1):
            onto = Presentation(
                g.source, syn.algebra, evaluate_substitution(g, syn.algebra, syn.assign)
            )
            if not onto.is_epi():
                continue
            if not check("BPS4", lang_inverse_hom(R, g), "An inverse substitution image is not a member"):
                break

    for (name, verdict) in verdicts.items():
        logger.info("%s on %r: %s (%d checked)", name, pool.name, verdict.holds, verdict.checked)
    return verdicts
