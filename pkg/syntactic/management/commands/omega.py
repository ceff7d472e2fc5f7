from __future__ import annotations

from finite_algebra.congruences import quotient_algebra
from syntactic.omega import class_description, isotone_report, omega_finite
from workspace.commands import (
    UsageError,
    WorkspaceCommand,
    parse_sorted_elements,
    parse_subset,
)
from workspace.serializers import AlgebraSerializer, EquivalenceSerializer, subset_data
from workspace.writer import to_dot

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from argparse import ArgumentParser
    from typing import Any, Dict, Optional, Tuple

    from sorted_core.sets import SortedSubset
    from workspace.loader import Workspace
    from workspace.reports import Report


def _pair(pair: Optional[Tuple[SortedSubset, SortedSubset]]) -> Any:
    if pair is None:
        return None
    return [subset_data(X) for X in pair]


class Command(WorkspaceCommand):
    help = "Computes the greatest congruence of an algebra that saturates a subset"

    def add_command_arguments(self, parser: ArgumentParser) -> None:
        parser.add_argument("algebra", help="Algebra to compute on. ")
        parser.add_argument(
            "--accept",
            action="append",
            default=[],
            help="Elements of the subset as SORT:e1,e2. May be repeated. ",
        )
        parser.add_argument(
            "--describe",
            default=None,
            help="Describe the class of SORT:e by the translations that accept or reject it. ",
        )
        parser.add_argument(
            "--isotone",
            action="store_true",
            help="Also check over all subsets whether the construction is isotone and meet preserving. ",
        )
        parser.add_argument(
            "--dot", default=None, help="Write the quotient as a DOT graph to this file. "
        )

    def run(self, workspace: Workspace, report: Report, /, **options) -> None:
        A = workspace.algebra(options["algebra"])
        L = parse_subset(A.carriers, options["accept"])

        omega = omega_finite(A, L)
        quotient, _ = quotient_algebra(A, omega)
        quotient = quotient.renamed("{}_omega".format(options["algebra"]))

        report.add("accept", subset_data(L))
        report.add("omega", EquivalenceSerializer(omega).data)
        report.add("index", {s: omega.index(s) for s in A.signature.sorts})
        report.add("quotient", AlgebraSerializer(quotient).data)

        if options["describe"]:
            sort, elements = parse_sorted_elements(options["describe"])
            if len(elements) != 1:
                raise UsageError("--describe takes exactly one element")
            described = class_description(A, L, sort, elements[0], limits=self.limits)
            carrier = A.carriers.carrier(sort)

            def ordered(X) -> list:
                return [x for x in carrier if x in X]

            description: Dict[str, Any] = {
                "sort": sort,
                "element": elements[0],
                "positive": [ordered(X) for X in described.positive],
                "negative": [ordered(X) for X in described.negative],
                "reconstructed": ordered(described.reconstructed),
                "class": list(omega.block_of(sort, elements[0])),
            }
            report.add("description", description)

        if options["isotone"]:
            iso = isotone_report(A)
            report.add(
                "isotone",
                {
                    "isotone": iso.isotone,
                    "meet_preserving": iso.meet_preserving,
                    "isotone_witness": _pair(iso.isotone_witness),
                    "meet_witness": _pair(iso.meet_witness),
                },
            )

        if options["dot"]:
            with open(options["dot"], "w", encoding="utf-8") as f:
                f.write(to_dot(quotient) + "\n")
            report.add("dot", options["dot"])
