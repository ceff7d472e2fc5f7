from __future__ import annotations

from formations.closure import MODES, STANDARD, formation_closure, formation_join, formation_meet, is_formation
from formations.verdicts import Verdict
from formations.views import congruence_formation_query, language_formation_membership
from workspace.commands import UsageError, WorkspaceCommand, add_pool_arguments, pool_from_options
from workspace.serializers import ClosureReportSerializer, PoolSerializer, witness_data
from workspace.writer import dump_pool_with_members, presentation_text

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from argparse import ArgumentParser
    from typing import Any, Dict

    from formations.pools import AlgebraPool
    from workspace.loader import Workspace
    from workspace.reports import Report

ACTIONS = ("close", "member", "is-formation", "join", "meet")
BOTH = "both"


class Command(WorkspaceCommand):
    help = "Closes pools of algebras into formations and checks membership and the formation laws"

    def add_command_arguments(self, parser: ArgumentParser) -> None:
        parser.add_argument("action", choices=ACTIONS, help="What to do with the pool. ")
        add_pool_arguments(parser)
        parser.add_argument(
            "--close",
            action="store_true",
            help="For member: close the pool into a formation first. ",
        )
        parser.add_argument(
            "--algebra",
            action="append",
            default=[],
            help="For member: an algebra to look up. May be repeated. ",
        )
        parser.add_argument(
            "--recognizer",
            action="append",
            default=[],
            help="For member: a recognizer whose language to look up. May be repeated. ",
        )
        parser.add_argument(
            "--gens",
            action="append",
            default=[],
            help="For member: list the kernels over this generator set. May be repeated. ",
        )
        parser.add_argument(
            "--mode",
            choices=MODES + (BOTH,),
            default=STANDARD,
            help="For is-formation: closure under subdirect products, or under meet quotients. ",
        )
        parser.add_argument(
            "--write",
            default=None,
            help="For close, join and meet: write the resulting pool and its members to this file. ",
        )

    def closure(self, pool: AlgebraPool, options: Dict[str, Any], report: Report) -> AlgebraPool:
        with self.progress(options, desc="closure", unit="round") as bar:

            def on_progress(rounds: int, size: int) -> None:
                bar.update(1)
                bar.set_postfix(members=size)

            closure = formation_closure(pool, limits=self.limits, on_progress=on_progress)
        report.add("closure", ClosureReportSerializer(closure).data)
        return closure.closed

    def write(self, pool: AlgebraPool, options: Dict[str, Any], report: Report) -> None:
        if options["write"]:
            with open(options["write"], "w", encoding="utf-8") as f:
                f.write(dump_pool_with_members(pool) + "\n")
            report.add("written", options["write"])

    def run(self, workspace: Workspace, report: Report, /, **options) -> None:
        action = options["action"]

        if action in ("join", "meet"):
            if len(options["pool"]) != 2 or options["seed"]:
                raise UsageError("{} needs exactly two --pool".format(action))
            P, Q = (workspace.pool(n) for n in options["pool"])
            if action == "join":
                result = formation_join(P, Q, limits=self.limits)
            else:
                result = formation_meet(P, Q)
            report.add("pool", PoolSerializer(result).data)
            self.write(result, options, report)
            return

        pool = pool_from_options(workspace, options, self.limits)

        if action == "close":
            closed = self.closure(pool, options, report)
            self.write(closed, options, report)
            return

        if action == "is-formation":
            modes = MODES if options["mode"] == BOTH else (options["mode"],)
            for mode in modes:
                report.verdict(is_formation(pool, mode=mode, limits=self.limits))
            return

        if options["close"]:
            pool = self.closure(pool, options, report)
        if not (options["algebra"] or options["recognizer"] or options["gens"]):
            raise UsageError("member needs --algebra, --recognizer or --gens")

        verdict = Verdict("member")
        for name in options["algebra"]:
            verdict.checked += 1
            A = workspace.algebra(name)
            if not pool.contains(A):
                verdict.fail("algebra", "{} is not a member".format(name), A)
        for name in options["recognizer"]:
            verdict.checked += 1
            R = workspace.recognizer(name)
            if not language_formation_membership(pool, R):
                verdict.fail(
                    "language", "The language of {} is not a member".format(name), R
                )
        report.verdict(verdict)

        kernels = []
        for name in options["gens"]:
            for P in congruence_formation_query(pool, workspace.generators(name)):
                kernels.append(
                    {
                        "generators": name,
                        "assign": presentation_text(P),
                        "quotient": witness_data(P.algebra),
                    }
                )
        if options["gens"]:
            report.add("kernels", kernels)
