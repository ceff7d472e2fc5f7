"""Writes objects back in the workspace format, and algebras as DOT graphs"""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import List, Optional

    from finite_algebra.algebra import FiniteAlgebra
    from formations.pools import AlgebraPool
    from signature_terms.signature import Signature
    from signature_terms.terms import GeneratorSet
    from syntactic.recognizers import Presentation, Recognizer

INDENT = "  "


def _name(obj, fallback: str) -> str:
    return getattr(obj, "name", None) or fallback


def dump_signature(sig: Signature, name: Optional[str] = None) -> str:
    lines = [
        "(signature {}".format(name or _name(sig, "SIG")),
        "{}(sorts {})".format(INDENT, " ".join(sig.sorts)),
    ]
    for op in sig.ops:
        lines.append("{}(op {} ({}) -> {})".format(INDENT, op.name, " ".join(op.arity), op.coarity))
    lines[-1] += ")"
    return "\n".join(lines)


def dump_algebra(A: FiniteAlgebra, name: Optional[str] = None, signature: Optional[str] = None) -> str:
    lines = [
        "(algebra {} :signature {}".format(
            name or _name(A, "ALG"), signature or _name(A.signature, "SIG")
        )
    ]
    for s in A.signature.sorts:
        lines.append("{}(carrier {} ({}))".format(INDENT, s, " ".join(A.carriers.carrier(s))))
    for op in A.signature.ops:
        entries = " ".join(
            "(({}) -> {})".format(" ".join(args), A.apply(op.name, args))
            for args in A.argument_tuples(op)
        )
        lines.append("{}(table {} {})".format(INDENT, op.name, entries))
    lines[-1] += ")"
    return "\n".join(lines)


def dump_generators(gens: GeneratorSet, name: Optional[str] = None) -> str:
    lines = ["(generators {} :signature {}".format(name or _name(gens, "GENS"), _name(gens.signature, "SIG"))]
    for (x, s) in gens.variables:
        lines.append("{}(var {} {})".format(INDENT, x, s))
    lines[-1] += ")"
    return "\n".join(lines)


def dump_recognizer(
    R: Recognizer,
    name: Optional[str] = None,
    algebra: Optional[str] = None,
    generators: Optional[str] = None,
) -> str:
    lines = [
        "(recognizer {} :algebra {} :generators {}".format(
            name or _name(R, "REC"),
            algebra or _name(R.algebra, "ALG"),
            generators or _name(R.generators, "GENS"),
        )
    ]
    for (x, s) in R.generators.variables:
        lines.append("{}(assign {} -> {})".format(INDENT, x, R.assign.image(s, x)))
    for s in R.algebra.signature.sorts:
        members = R.accept.ordered(s)
        if members:
            lines.append("{}(accept {} ({}))".format(INDENT, s, " ".join(members)))
    lines[-1] += ")"
    return "\n".join(lines)


def dump_pool(pool: AlgebraPool, names: Optional[List[str]] = None) -> str:
    names = names or pool.names()
    return "(pool {} :bound {} :signature {} (algebras {}))".format(
        pool.name or "POOL", pool.bound, _name(pool.signature, "SIG"), " ".join(names)
    )


def dump_recognizer_with_algebra(R: Recognizer) -> str:
    """The recognizer with a private copy of its algebra, loadable on top of its signature and generators"""

    algebra = "{}_alg".format(_name(R, "REC"))
    return "\n\n".join(
        [dump_algebra(R.algebra, name=algebra), dump_recognizer(R, algebra=algebra)]
    )


def dump_pool_with_members(pool: AlgebraPool) -> str:
    """Every member, then the pool"""

    names = pool.names()
    parts = [dump_algebra(A, name=n) for (A, n) in zip(pool, names)]
    parts.append(dump_pool(pool, names))
    return "\n\n".join(parts)


def presentation_text(P: Presentation) -> str:
    return ", ".join(
        "{} -> {}".format(x, P.assign.image(s, x)) for (x, s) in P.generators.variables
    )


def _quote(text: str) -> str:
    return '"{}"'.format(text.replace("\\", "\\\\").replace('"', '\\"'))


def to_dot(A: FiniteAlgebra, name: Optional[str] = None) -> str:
    """A DOT graph with one node per element.

    Every table entry draws an edge from each argument to the value, labelled
    op/position for operations of several arguments; constants label their value.
    """

    lines = ["digraph {} {{".format(_quote(name or _name(A, "algebra")))]
    for s in A.signature.sorts:
        for x in A.carriers.carrier(s):
            lines.append(
                "  {} [label={}];".format(_quote("{}:{}".format(s, x)), _quote("{} : {}".format(x, s)))
            )

    for op in A.signature.ops:
        for args in A.argument_tuples(op):
            target = _quote("{}:{}".format(op.coarity, A.apply(op.name, args)))
            if op.is_nullary:
                lines.append("  {} [xlabel={}];".format(target, _quote(op.name)))
                continue
            for (i, (s, a)) in enumerate(zip(op.arity, args)):
                source = _quote("{}:{}".format(s, a))
                label = op.name if len(args) == 1 else "{}/{}".format(op.name, i)
                lines.append("  {} -> {} [label={}];".format(source, target, _quote(label)))
    lines.append("}")
    return "\n".join(lines)
