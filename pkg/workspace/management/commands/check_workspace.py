from __future__ import annotations

from finite_algebra.algebra import is_subfinal
from syntactic.recognizers import syntactic_quotient
from workspace.commands import WorkspaceCommand
from workspace.loader import ALGEBRA, GENERATORS, POOL, RECOGNIZER, SIGNATURE
from workspace.writer import (
    dump_algebra,
    dump_generators,
    dump_pool,
    dump_recognizer,
    dump_signature,
)

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from argparse import ArgumentParser

    from workspace.loader import Workspace
    from workspace.reports import Report

_DUMPERS = {
    SIGNATURE: dump_signature,
    ALGEBRA: dump_algebra,
    GENERATORS: dump_generators,
    RECOGNIZER: dump_recognizer,
    POOL: lambda pool, name: dump_pool(pool),
}


def normalized(workspace: Workspace) -> str:
    """Every object of the workspace, rewritten in declaration order"""

    parts = []
    for name in workspace.names():
        for (kind, dump) in _DUMPERS.items():
            if name in workspace.objects[kind]:
                parts.append(dump(workspace.objects[kind][name], name))
    return "\n\n".join(parts) + "\n"


class Command(WorkspaceCommand):
    help = "Loads and validates workspace files, and summarizes what they declare"

    def add_command_arguments(self, parser: ArgumentParser) -> None:
        parser.add_argument(
            "--write",
            default=None,
            help="Write the workspace back in normal form to this file. ",
        )

    def run(self, workspace: Workspace, report: Report, /, **options) -> None:
        report.add("objects", len(workspace))
        report.add(
            "signatures",
            [
                {"name": n, "sorts": list(sig.sorts), "ops": len(sig.ops)}
                for (n, sig) in workspace.objects[SIGNATURE].items()
            ],
        )
        report.add(
            "algebras",
            [
                {
                    "name": n,
                    "sizes": {s: A.size(s) for s in A.signature.sorts},
                    "subfinal": is_subfinal(A),
                }
                for (n, A) in workspace.objects[ALGEBRA].items()
            ],
        )
        report.add(
            "generators",
            [
                {"name": n, "variables": ["{}:{}".format(x, s) for (x, s) in gens.variables]}
                for (n, gens) in workspace.objects[GENERATORS].items()
            ],
        )
        report.add(
            "recognizers",
            [
                {"name": n, "syntactic_index": syntactic_quotient(R).total_index}
                for (n, R) in workspace.objects[RECOGNIZER].items()
            ],
        )
        report.add(
            "pools",
            [
                {"name": n, "bound": pool.bound, "members": pool.names()}
                for (n, pool) in workspace.objects[POOL].items()
            ],
        )

        if options["write"]:
            with open(options["write"], "w", encoding="utf-8") as f:
                f.write(normalized(workspace))
            report.add("written", options["write"])
