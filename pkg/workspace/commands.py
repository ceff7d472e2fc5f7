"""The shared frame of every command: workspace flags, limits, errors and reports"""

from __future__ import annotations

import logging
import sys

from django.core.management.base import BaseCommand, CommandError
from tqdm import tqdm

from formations.pools import AlgebraPool
from sorted_core.errors import AlgebraError, BoundExceeded
from sorted_core.limits import Limits
from sorted_core.sets import SortedEquivalence, SortedSubset

from .errors import WorkspaceError
from .loader import Workspace, load
from .reports import BOUND_EXCEEDED, USAGE, Report

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from argparse import ArgumentParser
    from typing import Any, Dict, Iterable, List, Tuple

    from sorted_core.sets import SortedSet

logger = logging.getLogger(__name__)

CANONICAL = "canonical"

# options every django command has; they are not echoed in reports
_BASE_OPTIONS = {
    "verbosity",
    "settings",
    "pythonpath",
    "traceback",
    "no_color",
    "force_color",
    "skip_checks",
    "stdout",
    "stderr",
    "json",
    "no_timings",
}


class UsageError(Exception):
    """Arguments that parse but do not make sense"""

    pass


def parse_sorted_elements(text: str) -> Tuple[str, List[str]]:
    """Reads SORT:e1,e2,... (the element list may be empty)"""

    sort, sep, rest = text.partition(":")
    if not sep or not sort:
        raise UsageError("Expected SORT:e1,e2,... but got {0!r}".format(text))
    return sort, [e for e in rest.split(",") if e]


def parse_subset(ambient: SortedSet, values: Iterable[str]) -> SortedSubset:
    X = SortedSubset.empty(ambient)
    for text in values:
        sort, elements = parse_sorted_elements(text)
        X = X.union(SortedSubset.delta(ambient, sort, elements))
    return X


def parse_equivalence(ambient: SortedSet, values: Iterable[str]) -> SortedEquivalence:
    """Blocks given as SORT:a,b; elements not mentioned stay alone"""

    given: Dict[str, List[List[str]]] = {s: [] for s in ambient.sorts}
    for text in values:
        sort, elements = parse_sorted_elements(text)
        if sort not in given:
            raise UsageError("Unknown sort {0!r}".format(sort))
        given[sort].append(elements)

    blocks = {}
    for s in ambient.sorts:
        mentioned = {x for block in given[s] for x in block}
        blocks[s] = given[s] + [[x] for x in ambient.carrier(s) if x not in mentioned]
    return SortedEquivalence(ambient, blocks)


class WorkspaceCommand(BaseCommand):
    """A command that loads workspace files and writes one report"""

    def add_arguments(self, parser: ArgumentParser) -> None:
        parser.add_argument(
            "-w",
            "--workspace",
            action="append",
            default=[],
            help="Workspace file to load. May be given several times; files load in order. ",
        )
        parser.add_argument(
            "--json", action="store_true", help="Write the report as JSON. "
        )
        parser.add_argument(
            "--max-carrier",
            type=int,
            default=None,
            help="Total carrier bound for enumerations. Defaults to ALGEBRA_MAX_CARRIER. ",
        )
        parser.add_argument(
            "--max-homs",
            type=int,
            default=None,
            help="Bound on the homomorphism search space. Defaults to ALGEBRA_MAX_HOMS. ",
        )
        parser.add_argument(
            "--seed-order",
            choices=[CANONICAL],
            default=CANONICAL,
            help="Order in which seeds and members are visited. ",
        )
        parser.add_argument(
            "--no-timings",
            action="store_true",
            help="Leave timings out of the report, so that it is reproducible. ",
        )
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser: ArgumentParser) -> None:
        pass

    @property
    def command_name(self) -> str:
        return self.__module__.rsplit(".", 1)[-1]

    def run(self, workspace: Workspace, report: Report, /, **options) -> None:
        raise NotImplementedError

    def progress(self, options: Dict[str, Any], **kwargs) -> tqdm:
        """A progress bar on stderr, silent unless verbosity is above 1"""

        return tqdm(file=sys.stderr, disable=options["verbosity"] < 2, **kwargs)

    def handle(self, *args, **options) -> None:
        arguments = {
            k: v for (k, v) in sorted(options.items()) if k not in _BASE_OPTIONS
        }
        report = Report(self.command_name, arguments)

        try:
            self.limits = Limits.from_settings(
                max_carrier=options["max_carrier"], max_homs=options["max_homs"]
            )
            with report.timed("load"):
                workspace = load(options["workspace"], limits=self.limits)
            with report.timed("run"):
                self.run(workspace, report, **options)
        except BoundExceeded as e:
            logger.debug("Bound %d exceeded", e.bound)
            report.error(e.message, BOUND_EXCEEDED)
            report.add("bound", e.bound)
        except (WorkspaceError, AlgebraError, UsageError, ValueError) as e:
            report.error(str(e), USAGE)

        timings = not options["no_timings"]
        if options["json"]:
            self.stdout.write(report.render_json(timings))
        else:
            self.stdout.write(report.render_text(timings))

        if report.exit_code != 0:
            message = report.errors[0] if report.errors else "A verdict is false"
            raise CommandError(message, returncode=report.exit_code)


def add_pool_arguments(parser: ArgumentParser) -> None:
    parser.add_argument(
        "--pool",
        action="append",
        default=[],
        help="A pool declared in the workspace. ",
    )
    parser.add_argument(
        "--seed",
        action="append",
        default=[],
        help="An algebra to put into an ad-hoc pool. May be repeated. ",
    )
    parser.add_argument(
        "--bound",
        type=int,
        default=None,
        help="Total carrier bound of an ad-hoc pool. Defaults to --max-carrier, then FORMATION_MAX_CARRIER. ",
    )


def pool_from_options(
    workspace: Workspace, options: Dict[str, Any], limits: Limits
) -> AlgebraPool:
    """The one pool named by --pool, or the pool of the --seed algebras"""

    if options["pool"] and options["seed"]:
        raise UsageError("Give either --pool or --seed, not both")
    if options["pool"]:
        if len(options["pool"]) != 1:
            raise UsageError("Exactly one --pool is needed here")
        return workspace.pool(options["pool"][0])
    if not options["seed"]:
        raise UsageError("Give a pool with --pool or seed algebras with --seed")

    seeds = [workspace.algebra(n) for n in options["seed"]]
    bound = options["bound"] or options["max_carrier"] or limits.formation_carrier
    return AlgebraPool(seeds[0].signature, bound, seeds, name="seed", limits=limits)
