from __future__ import annotations

from finite_algebra.congruences import congruence_generated
from sorted_core.operations import is_saturated, saturate, saturated_atoms
from workspace.commands import WorkspaceCommand, parse_equivalence, parse_subset
from workspace.serializers import EquivalenceSerializer, subset_data

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from argparse import ArgumentParser

    from workspace.loader import Workspace
    from workspace.reports import Report


class Command(WorkspaceCommand):
    help = "Saturates a subset of the carriers of an algebra by an equivalence"

    def add_command_arguments(self, parser: ArgumentParser) -> None:
        parser.add_argument("algebra", help="Algebra whose carriers are used. ")
        parser.add_argument(
            "--subset",
            action="append",
            default=[],
            help="Elements of the subset as SORT:e1,e2. May be repeated. ",
        )
        parser.add_argument(
            "--block",
            action="append",
            default=[],
            help="A block of the equivalence as SORT:a,b. Unmentioned elements stay alone. ",
        )
        parser.add_argument(
            "--congruence",
            action="store_true",
            help="Use the least congruence containing the blocks instead. ",
        )
        parser.add_argument(
            "--atoms",
            action="store_true",
            help="Also list the atoms of the saturated subsets. ",
        )

    def run(self, workspace: Workspace, report: Report, /, **options) -> None:
        A = workspace.algebra(options["algebra"])
        X = parse_subset(A.carriers, options["subset"])
        Phi = parse_equivalence(A.carriers, options["block"])
        if options["congruence"]:
            Phi = congruence_generated(
                A,
                [
                    (s, block[0], x)
                    for s in A.signature.sorts
                    for block in Phi.blocks(s)
                    for x in block[1:]
                ],
            )

        report.add("equivalence", EquivalenceSerializer(Phi).data)
        report.add("subset", subset_data(X))
        report.add("saturation", subset_data(saturate(X, Phi)))
        report.add("saturated", is_saturated(X, Phi))
        if options["atoms"]:
            report.add("atoms", [subset_data(M) for M in saturated_atoms(Phi)])
