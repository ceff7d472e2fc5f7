"""Loads workspace files into named, validated objects.

A workspace file is a sequence of s-expressions, one per object:

    (signature NAME (sorts s ...) (op NAME (s ...) -> s) ...)
    (algebra NAME :signature SIG (carrier s (e ...)) ... (table OP ((e ...) -> e) ...) ...)
    (generators NAME :signature SIG (var x s) ...)
    (recognizer NAME :algebra ALG :generators GENS (assign x -> e) ... (accept s (e ...)) ...)
    (pool NAME :bound N [:signature SIG] (algebras A ...))

Objects may only refer to objects declared before them, possibly in an
earlier file. Names are unique across all kinds.
"""

from __future__ import annotations

import logging

from finite_algebra.algebra import FiniteAlgebra, validate
from formations.pools import AlgebraPool
from signature_terms.errors import TermSyntaxError
from signature_terms.reader import Atom, SList, read
from signature_terms.signature import Signature
from signature_terms.terms import GeneratorSet
from sorted_core.errors import AlgebraError
from sorted_core.limits import resolve
from sorted_core.sets import SortedMap, SortedSet, SortedSubset
from syntactic.recognizers import Recognizer

from .errors import WorkspaceError

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Any, Dict, Iterable, List, Optional, Tuple, Union

    from sorted_core.limits import Limits

    Node = Union[Atom, SList]

logger = logging.getLogger(__name__)

SIGNATURE = "signature"
ALGEBRA = "algebra"
GENERATORS = "generators"
RECOGNIZER = "recognizer"
POOL = "pool"
KINDS = (SIGNATURE, ALGEBRA, GENERATORS, RECOGNIZER, POOL)

ARROW = "->"


class Workspace(object):
    """Named signatures, algebras, generator sets, recognizers and pools"""

    def __init__(self, limits: Optional[Limits] = None):
        self.limits = resolve(limits)
        self.objects: Dict[str, Dict[str, Any]] = {kind: {} for kind in KINDS}
        self.origins: Dict[str, str] = {}

    def add(self, kind: str, name: str, obj: Any, origin: str) -> None:
        if name in self.origins:
            raise WorkspaceError(
                "Duplicate name {0!r}, first declared at {1}".format(name, self.origins[name])
            )
        self.objects[kind][name] = obj
        self.origins[name] = origin

    def get(self, kind: str, name: str) -> Any:
        try:
            return self.objects[kind][name]
        except KeyError:
            if name in self.origins:
                raise WorkspaceError("{0!r} is not a {1}".format(name, kind))
            raise WorkspaceError("Unknown {0} {1!r}".format(kind, name))

    def signature(self, name: str) -> Signature:
        return self.get(SIGNATURE, name)

    def algebra(self, name: str) -> FiniteAlgebra:
        return self.get(ALGEBRA, name)

    def generators(self, name: str) -> GeneratorSet:
        return self.get(GENERATORS, name)

    def recognizer(self, name: str) -> Recognizer:
        return self.get(RECOGNIZER, name)

    def pool(self, name: str) -> AlgebraPool:
        return self.get(POOL, name)

    def names(self, kind: Optional[str] = None) -> List[str]:
        if kind is not None:
            return list(self.objects[kind])
        return list(self.origins)

    def __len__(self) -> int:
        return len(self.origins)


class _Form(object):
    """One top-level declaration, split into name, keywords and clauses"""

    def __init__(self, node: Node, path: str):
        self.path = path
        if not isinstance(node, SList) or node.head() not in KINDS:
            raise self.error("Expected one of {}".format(", ".join(KINDS)), node)

        self.kind = node.head()
        self.line = node.position[0]
        items = node.items[1:]
        if len(items) == 0 or not isinstance(items[0], Atom):
            raise self.error("{} needs a name".format(self.kind), node)
        self.name = items[0].value

        self.keywords: Dict[str, Atom] = {}
        self.clauses: List[SList] = []
        rest = list(items[1:])
        while rest:
            item = rest.pop(0)
            if isinstance(item, Atom) and item.value.startswith(":"):
                if not rest or not isinstance(rest[0], Atom):
                    raise self.error("Keyword {} needs a value".format(item.value), item)
                self.keywords[item.value[1:]] = rest.pop(0)
            elif isinstance(item, SList):
                self.clauses.append(item)
            else:
                raise self.error("Unexpected {0!r}".format(item.value), item)

    def error(self, message: str, node: Optional[Node] = None) -> WorkspaceError:
        line = node.position[0] if node is not None else self.line
        return WorkspaceError(message, self.path, line)

    def keyword(self, key: str, required: bool = True) -> Optional[str]:
        if key not in self.keywords:
            if required:
                raise self.error("{} {!r} needs :{}".format(self.kind, self.name, key))
            return None
        return self.keywords[key].value

    def clauses_of(self, head: str) -> List[SList]:
        return [c for c in self.clauses if c.head() == head]

    def check_clauses(self, *heads: str) -> None:
        for c in self.clauses:
            if c.head() not in heads:
                raise self.error(
                    "Unexpected clause {0!r} in {1}".format(c.head() or "()", self.kind), c
                )


def _atoms(form: _Form, node: Node) -> List[str]:
    """The values of a list of atoms"""

    if not isinstance(node, SList):
        raise form.error("Expected a list", node)
    values = []
    for item in node.items:
        if not isinstance(item, Atom):
            raise form.error("Expected a name, found a list", item)
        values.append(item.value)
    return values


def _arrow(form: _Form, clause: SList, start: int) -> Tuple[Node, str]:
    """Reads 'LHS -> value' starting at items[start]"""

    items = clause.items[start:]
    if (
        len(items) != 3
        or not isinstance(items[1], Atom)
        or items[1].value != ARROW
        or not isinstance(items[2], Atom)
    ):
        raise form.error("Expected '... -> value'", clause)
    return items[0], items[2].value


def _signature(form: _Form, ws: Workspace, limits: Limits) -> Signature:
    form.check_clauses("sorts", "op")
    sorts_clauses = form.clauses_of("sorts")
    if len(sorts_clauses) != 1:
        raise form.error("A signature needs exactly one (sorts ...) clause")
    sorts = _atoms(form, sorts_clauses[0])[1:]

    ops = []
    for clause in form.clauses_of("op"):
        if len(clause.items) < 2 or not isinstance(clause.items[1], Atom):
            raise form.error("Expected (op NAME (s ...) -> s)", clause)
        arity, coarity = _arrow(form, clause, 2)
        ops.append((clause.items[1].value, _atoms(form, arity), coarity))

    return Signature.build(sorts, ops, name=form.name)


def _algebra(form: _Form, ws: Workspace, limits: Limits) -> FiniteAlgebra:
    form.check_clauses("carrier", "table")
    sig = ws.signature(form.keyword(SIGNATURE))

    carriers: Dict[str, List[str]] = {s: [] for s in sig.sorts}
    for clause in form.clauses_of("carrier"):
        if len(clause.items) != 3 or not isinstance(clause.items[1], Atom):
            raise form.error("Expected (carrier s (e ...))", clause)
        sort = clause.items[1].value
        if sort not in carriers:
            raise form.error("Unknown sort {0!r}".format(sort), clause)
        carriers[sort] = _atoms(form, clause.items[2])

    tables: Dict[str, Dict[Tuple[str, ...], str]] = {}
    for clause in form.clauses_of("table"):
        if len(clause.items) < 2 or not isinstance(clause.items[1], Atom):
            raise form.error("Expected (table OP ((e ...) -> e) ...)", clause)
        op = clause.items[1].value
        table = tables.setdefault(op, {})
        for entry in clause.items[2:]:
            if not isinstance(entry, SList):
                raise form.error("Expected ((e ...) -> e)", entry)
            args, value = _arrow(form, entry, 0)
            args = tuple(_atoms(form, args))
            if args in table:
                raise form.error("Duplicate entry for {}({})".format(op, " ".join(args)), entry)
            table[args] = value

    A = FiniteAlgebra(sig, SortedSet(carriers), tables, name=form.name)
    diagnostics = validate(A)
    if diagnostics:
        raise form.error("Algebra {0!r} is invalid: {1}".format(form.name, diagnostics[0]))
    return A


def _generators(form: _Form, ws: Workspace, limits: Limits) -> GeneratorSet:
    form.check_clauses("var")
    sig = ws.signature(form.keyword(SIGNATURE))

    variables = []
    for clause in form.clauses_of("var"):
        values = _atoms(form, clause)
        if len(values) != 3:
            raise form.error("Expected (var x s)", clause)
        variables.append((values[1], values[2]))
    return GeneratorSet(sig, variables, name=form.name)


def _recognizer(form: _Form, ws: Workspace, limits: Limits) -> Recognizer:
    form.check_clauses("assign", "accept")
    A = ws.algebra(form.keyword(ALGEBRA))
    gens = ws.generators(form.keyword(GENERATORS))

    images: Dict[str, Dict[str, str]] = {s: {} for s in gens.sorts}
    for clause in form.clauses_of("assign"):
        if len(clause.items) != 4 or not isinstance(clause.items[1], Atom):
            raise form.error("Expected (assign x -> e)", clause)
        x, value = clause.items[1].value, _arrow(form, clause, 1)[1]
        if not gens.declares(x):
            raise form.error("Unknown generator {0!r}".format(x), clause)
        images[gens.sort_of(x)][x] = value

    accept: Dict[str, List[str]] = {}
    for clause in form.clauses_of("accept"):
        if len(clause.items) != 3 or not isinstance(clause.items[1], Atom):
            raise form.error("Expected (accept s (e ...))", clause)
        accept.setdefault(clause.items[1].value, []).extend(_atoms(form, clause.items[2]))

    assign = SortedMap(gens, A.carriers, images)
    return Recognizer(gens, A, assign, SortedSubset(A.carriers, accept), name=form.name)


def _pool(form: _Form, ws: Workspace, limits: Limits) -> AlgebraPool:
    form.check_clauses("algebras")
    bound_text = form.keyword("bound")
    try:
        bound = int(bound_text)
    except ValueError:
        raise form.error("The bound must be a number, not {0!r}".format(bound_text))

    members = []
    for clause in form.clauses_of("algebras"):
        members.extend(ws.algebra(name) for name in _atoms(form, clause)[1:])

    sig_name = form.keyword(SIGNATURE, required=False)
    if sig_name is not None:
        sig = ws.signature(sig_name)
    elif members:
        sig = members[0].signature
    else:
        raise form.error("An empty pool needs :signature")

    return AlgebraPool(sig, bound, members, name=form.name, limits=limits)


_BUILDERS = {
    SIGNATURE: _signature,
    ALGEBRA: _algebra,
    GENERATORS: _generators,
    RECOGNIZER: _recognizer,
    POOL: _pool,
}


def loads(
    text: str,
    path: str = "<string>",
    workspace: Optional[Workspace] = None,
    limits: Optional[Limits] = None,
) -> Workspace:
    """Adds the objects declared in text to workspace (or a new one)"""

    ws = workspace if workspace is not None else Workspace(limits)

    try:
        nodes = read(text)
    except TermSyntaxError as e:
        raise WorkspaceError(e.reason, path, e.position[0] if e.position else None)

    for node in nodes:
        form = _Form(node, path)
        try:
            obj = _BUILDERS[form.kind](form, ws, ws.limits)
        except WorkspaceError as e:
            if e.path is None:
                raise form.error(e.message)
            raise
        except AlgebraError as e:
            raise form.error(e.message)
        try:
            ws.add(form.kind, form.name, obj, "{}:{}".format(path, form.line))
        except WorkspaceError as e:
            raise form.error(e.message)

    return ws


def load(paths: Iterable[str], limits: Optional[Limits] = None) -> Workspace:
    """Loads workspace files in order into one workspace"""

    ws = Workspace(limits)
    for path in paths:
        try:
            with open(path, encoding="utf-8") as f:
                text = f.read()
        except OSError as e:
            raise WorkspaceError("Cannot read file: {}".format(e.strerror), path)
        loads(text, path, workspace=ws)
        logger.debug("Loaded %s; workspace holds %d objects", path, len(ws))
    return ws
