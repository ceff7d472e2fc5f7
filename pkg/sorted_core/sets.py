"""Finite S-sorted sets and the values that live on them.

All types here are immutable after construction. Element identifiers are
opaque strings; the order of a carrier is the canonical order used for every
deterministic iteration.
"""

from __future__ import annotations

from .errors import AmbientMismatch, SortMismatch

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import (
        Dict,
        FrozenSet,
        Hashable,
        Iterable,
        Iterator,
        List,
        Mapping,
        Optional,
        Sequence,
        Tuple,
    )


class SortedSet(object):
    """A finite family of carriers indexed by sort"""

    __slots__ = ("_carriers", "_positions", "_hash")

    def __init__(self, carriers: Mapping[str, Iterable[str]]):
        self._carriers: Dict[str, Tuple[str, ...]] = {}
        self._positions: Dict[str, Dict[str, int]] = {}

        for sort, elements in carriers.items():
            if not isinstance(sort, str) or sort == "":
                raise SortMismatch("Sort names must be nonempty strings")

            elements = tuple(elements)
            positions = {x: i for (i, x) in enumerate(elements)}
            if len(positions) != len(elements):
                raise SortMismatch(
                    "Carrier of sort {0!r} contains duplicate elements".format(sort)
                )

            self._carriers[sort] = elements
            self._positions[sort] = positions

        self._hash: Optional[int] = None

    @property
    def sorts(self) -> Tuple[str, ...]:
        return tuple(self._carriers.keys())

    def carrier(self, sort: str) -> Tuple[str, ...]:
        try:
            return self._carriers[sort]
        except KeyError:
            raise SortMismatch("Unknown sort {0!r}".format(sort))

    def position(self, sort: str, element: str) -> int:
        """Returns the index of element within the carrier of sort"""

        try:
            return self._positions[sort][element]
        except KeyError:
            raise SortMismatch(
                "Element {0!r} is not in the carrier of sort {1!r}".format(
                    element, sort
                )
            )

    def contains(self, sort: str, element: str) -> bool:
        return sort in self._positions and element in self._positions[sort]

    def size(self, sort: str) -> int:
        return len(self.carrier(sort))

    def sizes(self) -> Dict[str, int]:
        return {s: len(c) for (s, c) in self._carriers.items()}

    @property
    def total_size(self) -> int:
        return sum(len(c) for c in self._carriers.values())

    def items(self) -> Iterator[Tuple[str, Tuple[str, ...]]]:
        return iter(self._carriers.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SortedSet):
            return NotImplemented
        return self._carriers == other._carriers

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(sorted(self._carriers.items())))
        return self._hash

    def __repr__(self) -> str:
        inner = ", ".join(
            "{}: [{}]".format(s, " ".join(c)) for (s, c) in self._carriers.items()
        )
        return "{}({{{}}})".format(self.__class__.__name__, inner)


class SortedSubset(object):
    """A subset X of an ambient sorted set, one member set per sort"""

    __slots__ = ("ambient", "_members")

    def __init__(
        self,
        ambient: SortedSet,
        members: Optional[Mapping[str, Iterable[str]]] = None,
    ):
        self.ambient = ambient
        self._members: Dict[str, FrozenSet[str]] = {
            s: frozenset() for s in ambient.sorts
        }

        for sort, elements in (members or {}).items():
            elements = frozenset(elements)
            for x in elements:
                if not ambient.contains(sort, x):
                    raise AmbientMismatch(
                        "Element {0!r} of sort {1!r} is not in the ambient sorted set".format(
                            x, sort
                        )
                    )
            self._members[sort] = elements

    @classmethod
    def empty(cls, ambient: SortedSet) -> SortedSubset:
        return cls(ambient)

    @classmethod
    def full(cls, ambient: SortedSet) -> SortedSubset:
        return cls(ambient, {s: c for (s, c) in ambient.items()})

    @classmethod
    def delta(cls, ambient: SortedSet, sort: str, elements: Iterable[str]) -> SortedSubset:
        """The Kronecker delta: elements at sort, empty everywhere else"""
        return cls(ambient, {sort: elements})

    def members(self, sort: str) -> FrozenSet[str]:
        try:
            return self._members[sort]
        except KeyError:
            raise SortMismatch("Unknown sort {0!r}".format(sort))

    def ordered(self, sort: str) -> Tuple[str, ...]:
        """The members at sort, in carrier order"""
        members = self.members(sort)
        return tuple(x for x in self.ambient.carrier(sort) if x in members)

    def contains(self, sort: str, element: str) -> bool:
        return element in self._members.get(sort, ())

    def is_empty(self) -> bool:
        return all(len(m) == 0 for m in self._members.values())

    def _check(self, other: SortedSubset) -> None:
        if self.ambient != other.ambient:
            raise AmbientMismatch("Subsets of different sorted sets")

    def union(self, other: SortedSubset) -> SortedSubset:
        self._check(other)
        return SortedSubset(
            self.ambient, {s: m | other._members[s] for (s, m) in self._members.items()}
        )

    def intersection(self, other: SortedSubset) -> SortedSubset:
        self._check(other)
        return SortedSubset(
            self.ambient, {s: m & other._members[s] for (s, m) in self._members.items()}
        )

    def difference(self, other: SortedSubset) -> SortedSubset:
        self._check(other)
        return SortedSubset(
            self.ambient, {s: m - other._members[s] for (s, m) in self._members.items()}
        )

    def complement(self) -> SortedSubset:
        return SortedSubset.full(self.ambient).difference(self)

    def issubset(self, other: SortedSubset) -> bool:
        self._check(other)
        return all(m <= other._members[s] for (s, m) in self._members.items())

    def __le__(self, other: SortedSubset) -> bool:
        return self.issubset(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SortedSubset):
            return NotImplemented
        return self.ambient == other.ambient and self._members == other._members

    def __hash__(self) -> int:
        return hash((self.ambient, tuple(sorted(self._members.items()))))

    def __repr__(self) -> str:
        inner = ", ".join(
            "{}: {{{}}}".format(s, " ".join(self.ordered(s))) for s in self.ambient.sorts
        )
        return "SortedSubset({})".format(inner)


class SortedMap(object):
    """A sorted mapping f = (f_s) from domain to codomain"""

    __slots__ = ("domain", "codomain", "_images")

    def __init__(
        self,
        domain: SortedSet,
        codomain: SortedSet,
        images: Mapping[str, Mapping[str, str]],
    ):
        self.domain = domain
        self.codomain = codomain
        self._images: Dict[str, Dict[str, str]] = {}

        for sort in domain.sorts:
            table = dict(images.get(sort, {}))
            for x in domain.carrier(sort):
                if x not in table:
                    raise SortMismatch(
                        "Sorted map is not total: {0!r} of sort {1!r} has no image".format(
                            x, sort
                        )
                    )
                if not codomain.contains(sort, table[x]):
                    raise SortMismatch(
                        "Image {0!r} of {1!r} is not in the codomain carrier of sort {2!r}".format(
                            table[x], x, sort
                        )
                    )
            self._images[sort] = {x: table[x] for x in domain.carrier(sort)}

    @classmethod
    def identity(cls, ambient: SortedSet) -> SortedMap:
        return cls(ambient, ambient, {s: {x: x for x in c} for (s, c) in ambient.items()})

    def image(self, sort: str, element: str) -> str:
        return self._images[sort][element]

    def table(self, sort: str) -> Dict[str, str]:
        return dict(self._images[sort])

    def is_injective(self) -> bool:
        return all(
            len(set(table.values())) == len(table) for table in self._images.values()
        )

    def is_surjective_at(self, sort: str) -> bool:
        return set(self._images[sort].values()) == set(self.codomain.carrier(sort))

    def is_surjective(self) -> bool:
        return all(self.is_surjective_at(s) for s in self.domain.sorts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SortedMap):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.codomain == other.codomain
            and self._images == other._images
        )

    def __hash__(self) -> int:
        return hash(
            (
                self.domain,
                self.codomain,
                tuple((s, tuple(t.items())) for (s, t) in self._images.items()),
            )
        )

    def __repr__(self) -> str:
        inner = "; ".join(
            "{}: {}".format(
                s, ", ".join("{}->{}".format(x, y) for (x, y) in table.items())
            )
            for (s, table) in self._images.items()
        )
        return "SortedMap({})".format(inner)


def compose(after: SortedMap, before: SortedMap) -> SortedMap:
    """Returns after ∘ before"""

    if before.codomain != after.domain:
        raise AmbientMismatch("Cannot compose sorted maps with mismatched ends")

    return SortedMap(
        before.domain,
        after.codomain,
        {
            s: {x: after.image(s, before.image(s, x)) for x in before.domain.carrier(s)}
            for s in before.domain.sorts
        },
    )


class SortedEquivalence(object):
    """A per-sort partition of an ambient sorted set, kept in canonical form.

    Every block is ordered by carrier position, and blocks are ordered by
    their least element. The label of an element is the index of its block.
    """

    __slots__ = ("ambient", "_labels", "_blocks", "_hash")

    def __init__(
        self,
        ambient: SortedSet,
        blocks: Mapping[str, Iterable[Iterable[str]]],
    ):
        labels: Dict[str, List[int]] = {}
        for sort in ambient.sorts:
            carrier = ambient.carrier(sort)
            raw = [None] * len(carrier)
            for (b, block) in enumerate(blocks.get(sort, [[x] for x in carrier])):
                block = list(block)
                if len(block) == 0:
                    raise AmbientMismatch(
                        "Empty block in partition of sort {0!r}".format(sort)
                    )
                for x in block:
                    i = ambient.position(sort, x)
                    if raw[i] is not None:
                        raise AmbientMismatch(
                            "Blocks of sort {0!r} overlap in {1!r}".format(sort, x)
                        )
                    raw[i] = b
            if None in raw:
                missing = carrier[raw.index(None)]
                raise AmbientMismatch(
                    "Blocks of sort {0!r} do not cover {1!r}".format(sort, missing)
                )
            labels[sort] = raw

        self._init_from_labels(ambient, labels)

    def _init_from_labels(
        self, ambient: SortedSet, labels: Mapping[str, Sequence[Hashable]]
    ) -> None:
        self.ambient = ambient
        self._labels: Dict[str, Tuple[int, ...]] = {}
        self._blocks: Dict[str, Tuple[Tuple[str, ...], ...]] = {}
        self._hash: Optional[int] = None

        for sort in ambient.sorts:
            carrier = ambient.carrier(sort)
            raw = labels[sort]
            if len(raw) != len(carrier):
                raise AmbientMismatch(
                    "Labelling of sort {0!r} does not match the carrier".format(sort)
                )

            # renumber by first occurrence, this is the canonical form
            renumber: Dict[Hashable, int] = {}
            canonical: List[int] = []
            blocks: List[List[str]] = []
            for x, label in zip(carrier, raw):
                if label not in renumber:
                    renumber[label] = len(blocks)
                    blocks.append([])
                canonical.append(renumber[label])
                blocks[renumber[label]].append(x)

            self._labels[sort] = tuple(canonical)
            self._blocks[sort] = tuple(tuple(b) for b in blocks)

    @classmethod
    def from_labels(
        cls, ambient: SortedSet, labels: Mapping[str, Sequence[Hashable]]
    ) -> SortedEquivalence:
        """Builds the equivalence relating elements whose labels are equal"""

        equivalence = cls.__new__(cls)
        equivalence._init_from_labels(ambient, labels)
        return equivalence

    @classmethod
    def identity(cls, ambient: SortedSet) -> SortedEquivalence:
        """Δ, the equality relation"""
        return cls.from_labels(
            ambient, {s: range(len(c)) for (s, c) in ambient.items()}
        )

    @classmethod
    def total(cls, ambient: SortedSet) -> SortedEquivalence:
        """∇, relating all elements of the same sort"""
        return cls.from_labels(ambient, {s: [0] * len(c) for (s, c) in ambient.items()})

    def blocks(self, sort: str) -> Tuple[Tuple[str, ...], ...]:
        return self._blocks[sort]

    def labels(self, sort: str) -> Tuple[int, ...]:
        """The block index of every carrier element, in carrier order"""
        return self._labels[sort]

    def label(self, sort: str, element: str) -> int:
        return self._labels[sort][self.ambient.position(sort, element)]

    def block_of(self, sort: str, element: str) -> Tuple[str, ...]:
        return self._blocks[sort][self.label(sort, element)]

    def representative(self, sort: str, element: str) -> str:
        return self.block_of(sort, element)[0]

    def related(self, sort: str, x: str, y: str) -> bool:
        return self.label(sort, x) == self.label(sort, y)

    def index(self, sort: str) -> int:
        """The number of classes at sort"""
        return len(self._blocks[sort])

    @property
    def total_index(self) -> int:
        return sum(len(b) for b in self._blocks.values())

    def is_identity(self) -> bool:
        return all(
            len(blocks) == self.ambient.size(s) for (s, blocks) in self._blocks.items()
        )

    def is_total(self) -> bool:
        return all(len(blocks) <= 1 for blocks in self._blocks.values())

    def refines(self, other: SortedEquivalence) -> bool:
        """True iff self ⊆ other, i.e. every block of self lies within a block of other"""

        if self.ambient != other.ambient:
            raise AmbientMismatch("Equivalences on different sorted sets")

        for sort in self.ambient.sorts:
            seen: Dict[int, int] = {}
            for mine, theirs in zip(self._labels[sort], other._labels[sort]):
                if seen.setdefault(mine, theirs) != theirs:
                    return False
        return True

    def __le__(self, other: SortedEquivalence) -> bool:
        return self.refines(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SortedEquivalence):
            return NotImplemented
        return self.ambient == other.ambient and self._labels == other._labels

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ambient, tuple(sorted(self._labels.items()))))
        return self._hash

    def __repr__(self) -> str:
        inner = "; ".join(
            "{}: {}".format(
                s, " | ".join(" ".join(block) for block in self._blocks[s])
            )
            for s in self.ambient.sorts
        )
        return "{}({})".format(self.__class__.__name__, inner)
