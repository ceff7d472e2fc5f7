"""The report every command writes: an echo of the command, results and verdicts"""

from __future__ import annotations

import time
from collections import OrderedDict

from rest_framework.renderers import JSONRenderer

from .serializers import VerdictSerializer

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Any, Dict, List, Optional

    from formations.verdicts import Verdict

OK = 0
VERDICT_FALSE = 1
USAGE = 2
BOUND_EXCEEDED = 3

STATUS = {
    OK: "ok",
    VERDICT_FALSE: "false",
    USAGE: "error",
    BOUND_EXCEEDED: "bound-exceeded",
}


class Report(object):
    """Collects results in insertion order; rendering is deterministic apart from timings"""

    def __init__(self, command: str, arguments: Dict[str, Any]):
        self.command = command
        self.arguments = arguments
        self.results: Dict[str, Any] = OrderedDict()
        self.verdicts: List[Dict[str, Any]] = []
        self.errors: List[str] = []
        self.timings: Dict[str, float] = OrderedDict()
        self.exit_code = OK

    def add(self, key: str, value: Any) -> None:
        self.results[key] = value

    def verdict(self, verdict: Verdict) -> bool:
        """Records a verdict; a false one makes the command exit with 1"""

        self.verdicts.append(VerdictSerializer(verdict).data)
        if not verdict.holds and self.exit_code == OK:
            self.exit_code = VERDICT_FALSE
        return verdict.holds

    def error(self, message: str, code: int) -> None:
        self.errors.append(message)
        self.exit_code = code

    def timed(self, label: str) -> _Timer:
        return _Timer(self, label)

    def data(self, timings: bool = True) -> Dict[str, Any]:
        data = OrderedDict()
        data["command"] = self.command
        data["arguments"] = self.arguments
        data["status"] = STATUS[self.exit_code]
        data["exit_code"] = self.exit_code
        data["results"] = self.results
        data["verdicts"] = self.verdicts
        data["errors"] = self.errors
        if timings:
            data["timings"] = self.timings
        return data

    def render_json(self, timings: bool = True) -> str:
        return (
            JSONRenderer()
            .render(self.data(timings), renderer_context={"indent": 2})
            .decode("utf-8")
        )

    def render_text(self, timings: bool = True) -> str:
        lines: List[str] = []
        _text(self.data(timings), 0, lines)
        return "\n".join(lines)


class _Timer(object):
    def __init__(self, report: Report, label: str):
        self.report = report
        self.label = label
        self.start: Optional[float] = None

    def __enter__(self) -> _Timer:
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc) -> None:
        self.report.timings[self.label] = round(time.perf_counter() - self.start, 6)


def _text(value: Any, depth: int, lines: List[str]) -> None:
    pad = "  " * depth
    if isinstance(value, dict):
        for (k, v) in value.items():
            if isinstance(v, (dict, list)) and v:
                lines.append("{}{}:".format(pad, k))
                _text(v, depth + 1, lines)
            elif isinstance(v, str) and "\n" in v:
                lines.append("{}{}:".format(pad, k))
                lines.extend("{}  {}".format(pad, line) for line in v.split("\n"))
            else:
                lines.append("{}{}: {}".format(pad, k, _scalar(v)))
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)):
                lines.append("{}-".format(pad))
                _text(item, depth + 1, lines)
            else:
                lines.append("{}- {}".format(pad, _scalar(item)))
    else:
        lines.append("{}{}".format(pad, _scalar(value)))


def _scalar(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (dict, list)):
        return "none"
    return str(value)
