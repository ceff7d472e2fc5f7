"""Shapes library objects into the JSON payloads of command reports"""

from __future__ import annotations

from rest_framework import serializers

from finite_algebra.algebra import FiniteAlgebra
from formations.pools import AlgebraPool
from signature_terms.parser import print_term
from signature_terms.terms import Term
from sorted_core.sets import SortedEquivalence, SortedSubset
from syntactic.recognizers import Presentation, Recognizer

from .writer import dump_algebra, dump_recognizer_with_algebra, presentation_text

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Any, Dict, List


class SignatureSerializer(serializers.Serializer):
    name = serializers.CharField(allow_null=True)
    sorts = serializers.ListField(child=serializers.CharField())
    ops = serializers.SerializerMethodField()

    def get_ops(self, sig) -> List[Dict[str, Any]]:
        return [
            {"name": op.name, "arity": list(op.arity), "coarity": op.coarity}
            for op in sig.ops
        ]


class AlgebraSerializer(serializers.Serializer):
    name = serializers.CharField(allow_null=True)
    signature = serializers.SerializerMethodField()
    sizes = serializers.SerializerMethodField()
    carriers = serializers.SerializerMethodField()
    text = serializers.SerializerMethodField()

    def get_signature(self, A: FiniteAlgebra) -> str:
        return A.signature.name

    def get_sizes(self, A: FiniteAlgebra) -> Dict[str, int]:
        return {s: A.size(s) for s in A.signature.sorts}

    def get_carriers(self, A: FiniteAlgebra) -> Dict[str, List[str]]:
        return {s: list(A.carriers.carrier(s)) for s in A.signature.sorts}

    def get_text(self, A: FiniteAlgebra) -> str:
        return dump_algebra(A)


class EquivalenceSerializer(serializers.Serializer):
    total_index = serializers.IntegerField()
    blocks = serializers.SerializerMethodField()

    def get_blocks(self, Phi: SortedEquivalence) -> Dict[str, List[List[str]]]:
        return {s: [list(b) for b in Phi.blocks(s)] for s in Phi.ambient.sorts}


def subset_data(X: SortedSubset) -> Dict[str, List[str]]:
    return {s: list(X.ordered(s)) for s in X.ambient.sorts}


class RecognizerSerializer(serializers.Serializer):
    name = serializers.CharField(allow_null=True)
    algebra = serializers.SerializerMethodField()
    assign = serializers.SerializerMethodField()
    accept = serializers.SerializerMethodField()
    text = serializers.SerializerMethodField()

    def get_algebra(self, R: Recognizer) -> str:
        return R.algebra.name

    def get_assign(self, R: Recognizer) -> str:
        return presentation_text(R)

    def get_accept(self, R: Recognizer) -> Dict[str, List[str]]:
        return subset_data(R.accept)

    def get_text(self, R: Recognizer) -> str:
        return dump_recognizer_with_algebra(R)


class PoolSerializer(serializers.Serializer):
    name = serializers.CharField(allow_null=True)
    bound = serializers.IntegerField()
    size = serializers.SerializerMethodField()
    members = serializers.SerializerMethodField()

    def get_size(self, pool: AlgebraPool) -> int:
        return len(pool)

    def get_members(self, pool: AlgebraPool) -> List[Dict[str, Any]]:
        return [
            {"name": n, "sizes": {s: A.size(s) for s in A.signature.sorts}}
            for (A, n) in zip(pool, pool.names())
        ]


def witness_data(obj: Any) -> Any:
    """Serializes whatever a failed check left behind"""

    if obj is None:
        return None
    if isinstance(obj, Recognizer):
        return {"kind": "recognizer", **RecognizerSerializer(obj).data}
    if isinstance(obj, Presentation):
        return {
            "kind": "presentation",
            "assign": presentation_text(obj),
            "algebra": AlgebraSerializer(obj.algebra).data,
        }
    if isinstance(obj, FiniteAlgebra):
        return {"kind": "algebra", **AlgebraSerializer(obj).data}
    if isinstance(obj, SortedEquivalence):
        return {"kind": "equivalence", **EquivalenceSerializer(obj).data}
    if isinstance(obj, SortedSubset):
        return {"kind": "subset", "members": subset_data(obj)}
    if isinstance(obj, Term):
        return {"kind": "term", "text": print_term(obj)}
    return {"kind": "text", "text": str(obj)}


class FailureSerializer(serializers.Serializer):
    condition = serializers.CharField()
    message = serializers.CharField()
    witness = serializers.SerializerMethodField()

    def get_witness(self, failure) -> Any:
        return witness_data(failure.witness)


class VerdictSerializer(serializers.Serializer):
    name = serializers.CharField()
    holds = serializers.BooleanField()
    checked = serializers.IntegerField()
    partial = serializers.BooleanField()
    gaps = serializers.ListField(child=serializers.CharField())
    failures = FailureSerializer(many=True)


class GenerationSerializer(serializers.Serializer):
    step = serializers.IntegerField()
    rule = serializers.CharField()
    member = serializers.CharField()
    origin = serializers.CharField(allow_null=True)


class EscapeSerializer(serializers.Serializer):
    factors = serializers.ListField(child=serializers.CharField())
    size = serializers.IntegerField()
    algebra = serializers.SerializerMethodField()

    def get_algebra(self, escape) -> Any:
        return witness_data(escape.algebra)


class ClosureReportSerializer(serializers.Serializer):
    closed = PoolSerializer()
    saturated_at_bound = serializers.BooleanField()
    rounds = serializers.IntegerField()
    generations = GenerationSerializer(many=True)
    escape = EscapeSerializer(allow_null=True)
