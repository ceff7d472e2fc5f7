"""The universal property of the free algebra: evaluation, substitution and
lifting generator choices through surjective homomorphisms.
"""

from __future__ import annotations

import itertools
import logging
import random

from sorted_core.errors import BoundExceeded, NoPreimage, SortMismatch
from sorted_core.sets import SortedMap

from .terms import Term, rebuild

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Dict, List, Mapping, Optional, Tuple

    from finite_algebra.algebra import FiniteAlgebra, Homomorphism

    from .signature import Signature
    from .terms import GeneratorSet

logger = logging.getLogger(__name__)


def evaluate(t: Term, algebra: FiniteAlgebra, assign: SortedMap) -> str:
    """Evaluates t in algebra, sending each variable x to assign(x)"""

    results: List[str] = []
    stack: List[Tuple[Term, bool]] = [(t, False)]
    while stack:
        node, expanded = stack.pop()
        if node.is_variable:
            results.append(assign.image(node.sort, node.symbol))
        elif expanded or len(node.children) == 0:
            n = len(node.children)
            args = results[len(results) - n :] if n else []
            if n:
                del results[len(results) - n :]
            results.append(algebra.apply(node.symbol, args))
        else:
            stack.append((node, True))
            stack.extend((c, False) for c in reversed(node.children))
    return results[0]


class Substitution(object):
    """Sends every generator of source to a term over target.

    Calling a substitution applies its unique extension to all terms.
    """

    def __init__(
        self,
        source: GeneratorSet,
        target: GeneratorSet,
        images: Mapping[str, Term],
    ):
        self.source = source
        self.target = target
        self._images: Dict[str, Term] = {}

        for (x, s) in source.variables:
            if x not in images:
                raise SortMismatch("Substitution has no image for {0!r}".format(x))
            image = images[x]
            if image.sort != s:
                raise SortMismatch(
                    "Image of {0!r} has sort {1!r}, expected {2!r}".format(
                        x, image.sort, s
                    )
                )
            for (y, ys) in image.variables():
                if not target.declares(y) or target.sort_of(y) != ys:
                    raise SortMismatch(
                        "Image of {0!r} uses {1!r}, which is not a generator of sort {2!r}".format(
                            x, y, ys
                        )
                    )
            self._images[x] = image

    @classmethod
    def identity(cls, generators: GeneratorSet) -> Substitution:
        return cls(generators, generators, {x: generators.leaf(x) for (x, _) in generators.variables})

    def image(self, x: str) -> Term:
        return self._images[x]

    def __call__(self, t: Term) -> Term:
        return rebuild(t, lambda v: self._images[v.symbol])

    def compose(self, before: Substitution) -> Substitution:
        """self ∘ before: first substitute with before, then with self"""

        if before.target != self.source:
            raise SortMismatch("Cannot compose substitutions with mismatched generators")

        return Substitution(
            before.source,
            self.target,
            {x: self(before.image(x)) for (x, _) in before.source.variables},
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Substitution):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self._images == other._images
        )

    def __hash__(self) -> int:
        return hash((self.source, self.target, tuple(self._images.items())))


def free_hom(
    source: GeneratorSet, target: GeneratorSet, images: Mapping[str, Term]
) -> Substitution:
    """The homomorphism between free algebras induced by images of generators"""

    return Substitution(source, target, images)


def evaluate_substitution(
    g: Substitution, algebra: FiniteAlgebra, assign: SortedMap
) -> SortedMap:
    """The generator assignment x -> evaluate(g(x)) on source generators"""

    return SortedMap(
        g.source,
        algebra.carriers,
        {
            s: {x: evaluate(g.image(x), algebra, assign) for x in g.source.carrier(s)}
            for s in g.source.sorts
        },
    )


def lift_through_epi(f: Homomorphism, g: SortedMap) -> SortedMap:
    """Returns h with f ∘ h = g, choosing least-index preimages"""

    if g.codomain != f.target.carriers:
        raise SortMismatch("The assignment does not land in the target of f")

    images: Dict[str, Dict[str, str]] = {}
    for s in g.domain.sorts:
        images[s] = {}
        for x in g.domain.carrier(s):
            wanted = g.image(s, x)
            for b in f.source.carriers.carrier(s):
                if f.image(s, b) == wanted:
                    images[s][x] = b
                    break
            else:
                raise NoPreimage(
                    "{0!r} of sort {1!r} has no preimage".format(wanted, s), s, wanted
                )

    return SortedMap(g.domain, f.source.carriers, images)


def enumerate_terms(
    signature: Signature,
    generators: GeneratorSet,
    depth: int,
    limit: Optional[int] = None,
) -> Dict[str, List[Term]]:
    """All terms of height at most depth, grouped by sort, smaller heights first.

    With a limit, raises BoundExceeded once more than limit terms would be produced.
    """

    by_sort: Dict[str, List[Term]] = {s: [] for s in signature.sorts}
    count = 0

    def emit(t: Term) -> None:
        nonlocal count
        count += 1
        if limit is not None and count > limit:
            raise BoundExceeded(
                "More than {} terms of height at most {}".format(limit, depth), limit
            )
        by_sort[t.sort].append(t)

    if depth <= 0:
        return by_sort

    # height 1: generators and constants
    newest: Dict[str, List[Term]] = {s: [] for s in signature.sorts}
    for (x, s) in generators.variables:
        newest[s].append(Term.var(x, s))
    for op in signature.nullary_ops:
        newest[op.coarity].append(Term(op.name, op.coarity))
    for s in signature.sorts:
        for t in newest[s]:
            emit(t)

    for height in range(2, depth + 1):
        older = {s: by_sort[s][: len(by_sort[s]) - len(newest[s])] for s in signature.sorts}
        fresh: Dict[str, List[Term]] = {s: [] for s in signature.sorts}

        for op in signature.proper_ops:
            pools = [older[s] + newest[s] for s in op.arity]
            for args in itertools.product(*pools):
                # at least one argument has the previous height
                if all(a.depth() < height - 1 for a in args):
                    continue
                fresh[op.coarity].append(Term(op.name, op.coarity, tuple(args)))

        for s in signature.sorts:
            for t in fresh[s]:
                emit(t)
        newest = fresh

    logger.debug("Enumerated %d terms up to height %d", count, depth)
    return by_sort


def random_term(
    signature: Signature,
    generators: GeneratorSet,
    sort: str,
    depth: int,
    rng: random.Random,
) -> Optional[Term]:
    """A random term of the given sort and height at most depth, or None if there is none"""

    leaves: Dict[str, List[Term]] = {s: [] for s in signature.sorts}
    for (x, s) in generators.variables:
        leaves[s].append(Term.var(x, s))
    for op in signature.nullary_ops:
        leaves[op.coarity].append(Term(op.name, op.coarity))

    # inhabited[h][s]: some term of sort s with height <= h exists
    inhabited = [{s: len(leaves[s]) > 0 for s in signature.sorts}]
    for _ in range(1, depth):
        prev = inhabited[-1]
        inhabited.append(
            {
                s: prev[s]
                or any(
                    all(prev[a] for a in op.arity) for op in signature.proper_ops if op.coarity == s
                )
                for s in signature.sorts
            }
        )

    def build(s: str, h: int) -> Term:
        options = list(leaves[s])
        if h > 1:
            options += [
                op
                for op in signature.proper_ops
                if op.coarity == s and all(inhabited[h - 2][a] for a in op.arity)
            ]
        choice = rng.choice(options)
        if isinstance(choice, Term):
            return choice
        return Term(choice.name, s, tuple(build(a, h - 1) for a in choice.arity))

    if depth <= 0 or not inhabited[depth - 1][sort]:
        return None
    return build(sort, depth)
