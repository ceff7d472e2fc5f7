from __future__ import annotations

from signature_terms.free import Substitution
from signature_terms.parser import parse_context, parse_term, print_term
from syntactic.recognizers import (
    COMPLEMENT,
    INTERSECTION,
    UNION,
    lang_boolean,
    lang_inverse_hom,
    lang_inverse_translation,
    membership,
    syntactic_quotient,
)
from workspace.commands import UsageError, WorkspaceCommand
from workspace.serializers import RecognizerSerializer
from workspace.writer import dump_recognizer_with_algebra

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from argparse import ArgumentParser
    from typing import Any, Dict, List

    from syntactic.recognizers import Recognizer
    from workspace.loader import Workspace
    from workspace.reports import Report

BOOLEAN = {"union": UNION, "inter": INTERSECTION, "compl": COMPLEMENT}
ACTIONS = ("union", "inter", "compl", "inv-ctx", "inv-hom")


class Command(WorkspaceCommand):
    help = "Builds recognizers for Boolean combinations and inverse images of languages"

    def add_command_arguments(self, parser: ArgumentParser) -> None:
        parser.add_argument("action", choices=ACTIONS, help="Operation to apply. ")
        parser.add_argument(
            "--recognizer",
            action="append",
            default=[],
            help="Recognizer of an operand. Given twice for union and inter. ",
        )
        parser.add_argument(
            "--context",
            default=None,
            help="For inv-ctx: a term with one hole written (_), e.g. '(f (_))'. ",
        )
        parser.add_argument(
            "--hole-sort",
            default=None,
            help="For inv-ctx: the sort of the hole, when it cannot be inferred. ",
        )
        parser.add_argument(
            "--source",
            default=None,
            help="For inv-hom: the generator set the substitution starts from. ",
        )
        parser.add_argument(
            "--map",
            action="append",
            default=[],
            help="For inv-hom: x=TERM, the image of a source generator. May be repeated. ",
        )
        parser.add_argument(
            "--term",
            action="append",
            default=[],
            help="A term over the generators of the result to test for membership. ",
        )
        parser.add_argument("--name", default=None, help="Name of the result. ")
        parser.add_argument(
            "--write",
            default=None,
            help="Write the resulting recognizer and its algebra to this file. ",
        )

    def operands(self, workspace: Workspace, options: Dict[str, Any], count: int) -> List[Recognizer]:
        names = options["recognizer"]
        if len(names) != count:
            raise UsageError(
                "{} needs {} --recognizer, got {}".format(options["action"], count, len(names))
            )
        return [workspace.recognizer(n) for n in names]

    def build(self, workspace: Workspace, options: Dict[str, Any]) -> Recognizer:
        action = options["action"]
        if action == "compl":
            (R,) = self.operands(workspace, options, 1)
            return lang_boolean(COMPLEMENT, R)
        if action in BOOLEAN:
            R1, R2 = self.operands(workspace, options, 2)
            return lang_boolean(BOOLEAN[action], R1, R2)

        (R,) = self.operands(workspace, options, 1)
        sig = R.generators.signature
        if action == "inv-ctx":
            if options["context"] is None:
                raise UsageError("inv-ctx needs --context")
            C = parse_context(options["context"], sig, R.generators, hole_sort=options["hole_sort"])
            L = lang_inverse_translation(R, C)
            return L.with_accept(L.accept, "{}_ctx".format(R.name))

        if options["source"] is None:
            raise UsageError("inv-hom needs --source")
        source = workspace.generators(options["source"])
        images = {}
        for text in options["map"]:
            x, sep, term = text.partition("=")
            if not sep:
                raise UsageError("Expected x=TERM but got {0!r}".format(text))
            images[x.strip()] = parse_term(term, sig, R.generators)
        L = lang_inverse_hom(R, Substitution(source, R.generators, images))
        return L.with_accept(L.accept, "{}_hom".format(R.name))

    def run(self, workspace: Workspace, report: Report, /, **options) -> None:
        result = self.build(workspace, options)
        if options["name"]:
            result = result.with_accept(result.accept, options["name"])

        report.add("recognizer", RecognizerSerializer(result).data)
        report.add("syntactic_index", syntactic_quotient(result).total_index)

        terms = []
        for text in options["term"]:
            t = parse_term(text, result.generators.signature, result.generators)
            terms.append({"term": print_term(t), "member": membership(result, t)})
        if terms:
            report.add("membership", terms)

        if options["write"]:
            with open(options["write"], "w", encoding="utf-8") as f:
                f.write(dump_recognizer_with_algebra(result) + "\n")
            report.add("written", options["write"])
