from __future__ import annotations

from formations.closure import formation_closure
from formations.eilenberg import bps_axioms_check, theta_roundtrip, vartheta_roundtrip
from workspace.commands import UsageError, WorkspaceCommand, add_pool_arguments, pool_from_options
from workspace.serializers import PoolSerializer

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from argparse import ArgumentParser

    from workspace.loader import Workspace
    from workspace.reports import Report

ACTIONS = ("theta", "vartheta", "bps")


class Command(WorkspaceCommand):
    help = "Checks within bounds that algebra, congruence and language formations determine each other"

    def add_command_arguments(self, parser: ArgumentParser) -> None:
        parser.add_argument("action", choices=ACTIONS, help="Which correspondence to check. ")
        add_pool_arguments(parser)
        parser.add_argument(
            "--close",
            action="store_true",
            help="Close the pool into a formation before checking. ",
        )
        parser.add_argument(
            "--gens",
            action="append",
            default=[],
            help="A generator set to sample the free algebras with. May be repeated. ",
        )
        parser.add_argument(
            "--budget",
            type=int,
            default=None,
            help="Sample budget. Defaults to EILENBERG_SAMPLE_BUDGET. ",
        )
        parser.add_argument(
            "--depth",
            type=int,
            default=1,
            help="For bps: depth of the terms filling contexts and substitutions. ",
        )

    def run(self, workspace: Workspace, report: Report, /, **options) -> None:
        if not options["gens"]:
            raise UsageError("Give at least one --gens")
        samples = [workspace.generators(n) for n in options["gens"]]

        pool = pool_from_options(workspace, options, self.limits)
        if options["close"]:
            with self.progress(options, desc="closure", unit="round") as bar:
                pool = formation_closure(
                    pool, limits=self.limits, on_progress=lambda rounds, size: bar.update(1)
                ).closed
        report.add("pool", PoolSerializer(pool).data)

        action = options["action"]
        if action == "theta":
            report.verdict(theta_roundtrip(pool, samples, limits=self.limits))
        elif action == "vartheta":
            report.verdict(
                vartheta_roundtrip(
                    pool, samples, sample_budget=options["budget"], limits=self.limits
                )
            )
        else:
            for generators in self.progress(options, iterable=samples, desc="bps"):
                verdicts = bps_axioms_check(
                    pool,
                    generators,
                    sample_budget=options["budget"],
                    limits=self.limits,
                    depth=options["depth"],
                )
                for verdict in verdicts.values():
                    verdict.name = "{} ({})".format(verdict.name, generators.name)
                    report.verdict(verdict)
