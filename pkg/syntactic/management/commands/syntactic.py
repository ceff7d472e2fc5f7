from __future__ import annotations

from signature_terms.parser import parse_term, print_term
from syntactic.recognizers import membership, syntactic_quotient
from workspace.commands import WorkspaceCommand
from workspace.serializers import AlgebraSerializer, EquivalenceSerializer
from workspace.writer import presentation_text, to_dot

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from argparse import ArgumentParser

    from workspace.loader import Workspace
    from workspace.reports import Report


class Command(WorkspaceCommand):
    help = "Computes the syntactic algebra of the language of a recognizer"

    def add_command_arguments(self, parser: ArgumentParser) -> None:
        parser.add_argument("--recognizer", required=True, help="Recognizer to use. ")
        parser.add_argument(
            "--term",
            action="append",
            default=[],
            help="A term to test for membership, e.g. '(f (x))'. May be repeated. ",
        )
        parser.add_argument(
            "--dot",
            default=None,
            help="Write the syntactic algebra as a DOT graph to this file. ",
        )

    def run(self, workspace: Workspace, report: Report, /, **options) -> None:
        R = workspace.recognizer(options["recognizer"])
        syn = syntactic_quotient(R)
        Q = syn.quotient

        accepted = {
            s: [
                q
                for q in Q.carriers.carrier(s)
                if any(syn.projection.image(s, b) == q for b in syn.accept.ordered(s))
            ]
            for s in Q.signature.sorts
        }

        report.add("index", syn.index)
        report.add("total_index", syn.total_index)
        report.add("finite_index", syn.finite_index)
        report.add("omega", EquivalenceSerializer(syn.omega).data)
        report.add("quotient", AlgebraSerializer(Q).data)
        report.add("accept", accepted)
        report.add("assign", presentation_text(syn.presentation))

        terms = []
        for text in options["term"]:
            t = parse_term(text, R.generators.signature, R.generators)
            terms.append({"term": print_term(t), "member": membership(R, t)})
        if terms:
            report.add("membership", terms)

        if options["dot"]:
            with open(options["dot"], "w", encoding="utf-8") as f:
                f.write(to_dot(Q) + "\n")
            report.add("dot", options["dot"])
