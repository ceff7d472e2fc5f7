from __future__ import annotations

from finite_algebra.congruences import enumerate_congruences, is_congruence, quotient_algebra
from formations.verdicts import Verdict
from sorted_core.partitions import equivalences
from translations.translations import is_closed_under_translations
from workspace.commands import WorkspaceCommand
from workspace.serializers import EquivalenceSerializer
from workspace.writer import to_dot

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from argparse import ArgumentParser

    from finite_algebra.algebra import FiniteAlgebra
    from sorted_core.limits import Limits
    from workspace.loader import Workspace
    from workspace.reports import Report


def decider_agreement(A: FiniteAlgebra, limits: Limits) -> Verdict:
    """Compatibility with the operations and closure under elementary translations agree"""

    verdict = Verdict("translation-agreement")
    for Phi in equivalences(A.carriers):
        verdict.checked += 1
        by_ops = is_congruence(A, Phi)
        by_translations = is_closed_under_translations(A, Phi, limits=limits)
        if by_ops != by_translations:
            verdict.fail(
                "agreement",
                "The deciders disagree ({} by operations, {} by translations)".format(
                    by_ops, by_translations
                ),
                Phi,
            )
    return verdict


class Command(WorkspaceCommand):
    help = "Lists the congruences of an algebra with their quotients"

    def add_command_arguments(self, parser: ArgumentParser) -> None:
        parser.add_argument("algebra", help="Algebra to inspect. ")
        parser.add_argument(
            "--dot",
            default=None,
            help="Write every quotient algebra as a DOT graph to this file. ",
        )
        parser.add_argument(
            "--agreement",
            action="store_true",
            help="Check on every equivalence that both congruence deciders agree. ",
        )

    def run(self, workspace: Workspace, report: Report, /, **options) -> None:
        A = workspace.algebra(options["algebra"])
        congruences = enumerate_congruences(A, limits=self.limits)

        quotients = []
        listing = []
        for (k, Phi) in enumerate(congruences):
            Q, _ = quotient_algebra(A, Phi)
            Q = Q.renamed("{}/{}".format(options["algebra"], k))
            quotients.append(Q)
            listing.append(
                {
                    "name": Q.name,
                    "equivalence": EquivalenceSerializer(Phi).data,
                    "sizes": {s: Q.size(s) for s in A.signature.sorts},
                }
            )

        report.add("count", len(congruences))
        report.add("congruences", listing)

        if options["agreement"]:
            report.verdict(decider_agreement(A, self.limits))

        if options["dot"]:
            with open(options["dot"], "w", encoding="utf-8") as f:
                f.write("\n".join(to_dot(Q) for Q in quotients) + "\n")
            report.add("dot", options["dot"])
