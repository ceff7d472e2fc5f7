"""Regular languages over free algebras, presented by finite recognizers.

A presentation is a finite algebra with an assignment of the generators; its
kernel is a finite index congruence on the free algebra. A recognizer adds an
accepting subset, and presents the terms evaluating into it.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

from finite_algebra.algebra import FiniteAlgebra
from finite_algebra.congruences import quotient_algebra
from finite_algebra.constructions import restrict, subalgebra_generated
from signature_terms.free import evaluate, evaluate_substitution
from signature_terms.terms import Term
from sorted_core.errors import AmbientMismatch, SortMismatch
from sorted_core.operations import tuple_name
from sorted_core.sets import SortedMap, SortedSet, SortedSubset

from .omega import omega_finite

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Dict, Iterable, List, Optional, Tuple

    from finite_algebra.algebra import Homomorphism
    from signature_terms.free import Substitution
    from signature_terms.signature import Signature
    from signature_terms.terms import Context, GeneratorSet
    from sorted_core.sets import SortedEquivalence

logger = logging.getLogger(__name__)

UNION = "union"
INTERSECTION = "intersection"
COMPLEMENT = "complement"
BOOLEAN_OPS = (UNION, INTERSECTION, COMPLEMENT)


@dataclass(frozen=True)
class Presentation:
    """A finite algebra together with a generator assignment"""

    generators: GeneratorSet
    algebra: FiniteAlgebra
    assign: SortedMap

    def __post_init__(self):
        if self.generators.signature != self.algebra.signature:
            raise AmbientMismatch("Generators and algebra use different signatures")
        if self.assign.domain != self.generators:
            raise AmbientMismatch("The assignment is not defined on the generators")
        if self.assign.codomain != self.algebra.carriers:
            raise AmbientMismatch("The assignment does not land in the carriers of the algebra")

    def evaluate(self, t: Term) -> str:
        for (x, s) in t.variables():
            if not self.generators.declares(x) or self.generators.sort_of(x) != s:
                raise SortMismatch(
                    "{0!r} of sort {1!r} is not one of the generators".format(x, s)
                )
        return evaluate(t, self.algebra, self.assign)

    def image_subset(self) -> SortedSubset:
        """The elements reached by some term"""

        seeds = SortedSubset(
            self.algebra.carriers,
            {
                s: [self.assign.image(s, x) for x in self.generators.carrier(s)]
                for s in self.generators.sorts
            },
        )
        return subalgebra_generated(self.algebra, seeds)

    def image(self) -> FiniteAlgebra:
        return restrict(self.algebra, self.image_subset(), name=self.algebra.name)

    def is_epi(self) -> bool:
        return self.image_subset() == SortedSubset.full(self.algebra.carriers)

    def corestricted(self) -> Presentation:
        """The same kernel, presented onto the image"""

        if self.is_epi():
            return self
        image = self.image()
        return Presentation(self.generators, image, _retarget(self.assign, image.carriers))

    def through(self, f: Homomorphism) -> Presentation:
        """f after the assignment; the kernel grows to the kernel of f ∘ assign^♯"""

        if f.source != self.algebra:
            raise AmbientMismatch("The homomorphism does not start at the presenting algebra")
        return Presentation(
            self.generators,
            f.target,
            SortedMap(
                self.generators,
                f.target.carriers,
                {
                    s: {x: f.image(s, self.assign.image(s, x)) for x in self.generators.carrier(s)}
                    for s in self.generators.sorts
                },
            ),
        )

    def quotient(self, Phi: SortedEquivalence) -> Presentation:
        """The presentation by the quotient of the algebra by a congruence"""

        _, projection = quotient_algebra(self.algebra, Phi)
        return self.through(projection)


@dataclass(frozen=True)
class Recognizer(Presentation):
    """Presents L = {t | assign^♯(t) ∈ accept}"""

    accept: SortedSubset
    name: Optional[str] = None

    def __post_init__(self):
        super().__post_init__()
        if self.accept.ambient != self.algebra.carriers:
            raise AmbientMismatch("The accepting subset does not live on the algebra")

    @property
    def presentation(self) -> Presentation:
        return Presentation(self.generators, self.algebra, self.assign)

    def with_accept(self, accept: SortedSubset, name: Optional[str] = None) -> Recognizer:
        return Recognizer(self.generators, self.algebra, self.assign, accept, name)


def _retarget(assign: SortedMap, codomain: SortedSet) -> SortedMap:
    return SortedMap(
        assign.domain,
        codomain,
        {s: assign.table(s) for s in assign.domain.sorts},
    )


def membership(R: Recognizer, t: Term) -> bool:
    return R.accept.contains(t.sort, R.evaluate(t))


@dataclass(frozen=True)
class SyntacticQuotient:
    """The syntactic algebra of a recognized language.

    The index is always finite: every recognizer presents a regular language.
    """

    image: FiniteAlgebra
    accept: SortedSubset
    omega: SortedEquivalence
    quotient: FiniteAlgebra
    projection: Homomorphism
    presentation: Presentation

    @property
    def index(self) -> Dict[str, int]:
        return {s: self.omega.index(s) for s in self.image.signature.sorts}

    @property
    def total_index(self) -> int:
        return self.omega.total_index

    @property
    def finite_index(self) -> bool:
        return True


def syntactic_quotient(R: Recognizer) -> SyntacticQuotient:
    image = R.image()
    accept = SortedSubset(
        image.carriers,
        {s: R.accept.members(s) & set(image.carriers.carrier(s)) for s in image.signature.sorts},
    )
    omega = omega_finite(image, accept)
    quotient, projection = quotient_algebra(image, omega)
    if R.name:
        quotient = quotient.renamed("Syn_{}".format(R.name))

    onto_image = Presentation(R.generators, image, _retarget(R.assign, image.carriers))
    presentation = onto_image.through(projection)

    logger.debug("Syntactic quotient of %r has index %d", R.name, omega.total_index)
    return SyntacticQuotient(image, accept, omega, quotient, projection, presentation)


def _reachable_product(
    P1: Presentation, P2: Presentation
) -> Tuple[FiniteAlgebra, SortedMap, Dict[str, Dict[str, Tuple[str, str]]]]:
    """The part of P1.algebra x P2.algebra reached from the paired generators.

    Returns the algebra, the paired assignment, and the components of every state.
    """

    if P1.generators != P2.generators or P1.algebra.signature != P2.algebra.signature:
        raise AmbientMismatch("Presentations must share generators and signature")

    gens = P1.generators
    sig = P1.algebra.signature
    B1, B2 = P1.algebra, P2.algebra

    reached: Dict[str, set] = {s: set() for s in sig.sorts}
    for s in gens.sorts:
        for x in gens.carrier(s):
            reached[s].add((P1.assign.image(s, x), P2.assign.image(s, x)))
    for op in sig.nullary_ops:
        reached[op.coarity].add((B1.apply(op.name, ()), B2.apply(op.name, ())))

    changed = True
    while changed:
        changed = False
        for op in sig.proper_ops:
            for args in itertools.product(*(list(reached[s]) for s in op.arity)):
                value = (
                    B1.apply(op.name, [a[0] for a in args]),
                    B2.apply(op.name, [a[1] for a in args]),
                )
                if value not in reached[op.coarity]:
                    reached[op.coarity].add(value)
                    changed = True

    components: Dict[str, Dict[str, Tuple[str, str]]] = {}
    for s in sig.sorts:
        pairs = sorted(
            reached[s],
            key=lambda p: (B1.carriers.position(s, p[0]), B2.carriers.position(s, p[1])),
        )
        components[s] = {tuple_name(p): p for p in pairs}

    carriers = SortedSet({s: list(components[s]) for s in sig.sorts})
    tables = {}
    for op in sig.ops:
        table = {}
        for args in itertools.product(*(carriers.carrier(s) for s in op.arity)):
            pairs = [components[s][a] for (s, a) in zip(op.arity, args)]
            table[args] = tuple_name(
                [
                    B1.apply(op.name, [p[0] for p in pairs]),
                    B2.apply(op.name, [p[1] for p in pairs]),
                ]
            )
        tables[op.name] = table

    name = None
    if B1.name and B2.name:
        name = "{}x{}".format(B1.name, B2.name)
    algebra = FiniteAlgebra(sig, carriers, tables, name=name)

    assign = SortedMap(
        gens,
        carriers,
        {
            s: {
                x: tuple_name([P1.assign.image(s, x), P2.assign.image(s, x)])
                for x in gens.carrier(s)
            }
            for s in gens.sorts
        },
    )
    return algebra, assign, components


def meet_presentation(P1: Presentation, P2: Presentation) -> Presentation:
    """A presentation whose kernel is the meet of both kernels"""

    algebra, assign, _ = _reachable_product(P1, P2)
    return Presentation(P1.generators, algebra, assign)


def lang_boolean(op: str, R1: Recognizer, R2: Optional[Recognizer] = None) -> Recognizer:
    if op not in BOOLEAN_OPS:
        raise SortMismatch("Unknown Boolean operation {0!r}".format(op))

    if op == COMPLEMENT:
        name = "~{}".format(R1.name) if R1.name else None
        return R1.with_accept(R1.accept.complement(), name)

    if R2 is None:
        raise SortMismatch("{0!r} needs two recognizers".format(op))

    algebra, assign, components = _reachable_product(R1, R2)
    accept: Dict[str, List[str]] = {}
    for (s, states) in components.items():
        accept[s] = []
        for (state, (b1, b2)) in states.items():
            in1 = R1.accept.contains(s, b1)
            in2 = R2.accept.contains(s, b2)
            if (in1 or in2) if op == UNION else (in1 and in2):
                accept[s].append(state)

    name = None
    if R1.name and R2.name:
        name = "{}_{}_{}".format(op, R1.name, R2.name)
    return Recognizer(R1.generators, algebra, assign, SortedSubset(algebra.carriers, accept), name)


class _WithHole(object):
    """A generator assignment extended by a value for the hole"""

    def __init__(self, assign: SortedMap, hole: str, sort: str, value: str):
        self.assign = assign
        self.hole = hole
        self.sort = sort
        self.value = value

    def image(self, sort: str, x: str) -> str:
        if x == self.hole and sort == self.sort:
            return self.value
        return self.assign.image(sort, x)


def lang_inverse_translation(R: Recognizer, C: Context) -> Recognizer:
    """Presents {t of the hole sort | C[t] ∈ L}"""

    if R.generators.declares(C.hole):
        raise SortMismatch("The hole {0!r} clashes with a generator".format(C.hole))
    for (x, s) in C.term.variables():
        if x == C.hole:
            continue
        if not R.generators.declares(x) or R.generators.sort_of(x) != s:
            raise SortMismatch("{0!r} of sort {1!r} is not one of the generators".format(x, s))

    t = C.hole_sort
    accepted = [
        b
        for b in R.algebra.carriers.carrier(t)
        if R.accept.contains(C.sort, evaluate(C.term, R.algebra, _WithHole(R.assign, C.hole, t, b)))
    ]
    return R.with_accept(SortedSubset.delta(R.algebra.carriers, t, accepted))


def lang_inverse_hom(R: Recognizer, g: Substitution) -> Recognizer:
    """Presents the preimage of L under the free homomorphism extending g"""

    if g.target != R.generators:
        raise AmbientMismatch("The substitution does not land in the generators of the recognizer")

    assign = evaluate_substitution(g, R.algebra, R.assign)
    return Recognizer(g.source, R.algebra, assign, R.accept, R.name)


def recognizer_from_terms(
    signature: Signature,
    generators: GeneratorSet,
    terms: Iterable[Term],
    name: Optional[str] = None,
) -> Recognizer:
    """Recognizes exactly the given terms.

    Every subterm becomes a state, named q0, q1, ...; everything else falls
    into the sink of its sort.
    """

    terms = list(terms)
    states: Dict[Term, str] = {}
    by_sort: Dict[str, List[str]] = {s: [] for s in signature.sorts}
    for t in terms:
        for node in t.nodes():
            if node.is_variable and (
                not generators.declares(node.symbol)
                or generators.sort_of(node.symbol) != node.sort
            ):
                raise SortMismatch(
                    "{0!r} of sort {1!r} is not one of the generators".format(
                        node.symbol, node.sort
                    )
                )
            if node not in states:
                states[node] = "q{}".format(len(states))
                by_sort[node.sort].append(states[node])

    sinks = {s: "sink_{}".format(s) for s in signature.sorts}
    carriers = SortedSet({s: by_sort[s] + [sinks[s]] for s in signature.sorts})

    tables: Dict[str, Dict[Tuple[str, ...], str]] = {}
    for op in signature.ops:
        tables[op.name] = {
            args: sinks[op.coarity]
            for args in itertools.product(*(carriers.carrier(s) for s in op.arity))
        }
    for (node, state) in states.items():
        if not node.is_variable:
            key = tuple(states[c] for c in node.children)
            tables[node.symbol][key] = state

    assign = SortedMap(
        generators,
        carriers,
        {
            s: {x: states.get(Term.var(x, s), sinks[s]) for x in generators.carrier(s)}
            for s in generators.sorts
        },
    )
    accept = SortedSubset(carriers, {})
    for t in terms:
        accept = accept.union(SortedSubset.delta(carriers, t.sort, [states[t]]))

    algebra = FiniteAlgebra(signature, carriers, tables, name=name)
    return Recognizer(generators, algebra, assign, accept, name)


KernelKey = tuple


def kernel_key(P: Presentation) -> KernelKey:
    """Identifies the kernel of assign^♯ on the free algebra.

    The reached elements are numbered in the order terms discover them, which
    only depends on the kernel. Equal keys mean equal kernels.
    """

    A = P.algebra
    sig = A.signature
    numbers: Dict[str, Dict[str, int]] = {s: {} for s in sig.sorts}
    order: Dict[str, List[str]] = {s: [] for s in sig.sorts}

    def visit(s: str, x: str) -> bool:
        if x in numbers[s]:
            return False
        numbers[s][x] = len(order[s])
        order[s].append(x)
        return True

    for (x, s) in P.generators.variables:
        visit(s, P.assign.image(s, x))
    for op in sig.nullary_ops:
        visit(op.coarity, A.apply(op.name, ()))

    changed = True
    while changed:
        changed = False
        for op in sig.proper_ops:
            for args in itertools.product(*(list(order[s]) for s in op.arity)):
                if visit(op.coarity, A.apply(op.name, args)):
                    changed = True

    tables = tuple(
        tuple(
            numbers[op.coarity][A.apply(op.name, args)]
            for args in itertools.product(*(order[s] for s in op.arity))
        )
        for op in sig.ops
    )
    return (
        tuple(len(order[s]) for s in sig.sorts),
        tuple(numbers[s][P.assign.image(s, x)] for (x, s) in P.generators.variables),
        tables,
    )
