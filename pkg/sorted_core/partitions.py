from __future__ import annotations

import itertools
from collections import Counter

from .sets import SortedEquivalence

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from typing import Dict, Hashable, Iterator, Tuple

    from .sets import SortedSet


def restricted_growth(n: int) -> Iterator[Tuple[int, ...]]:
    """Yields every partition of range(n) as a restricted growth string.

    A string g has g[0] = 0 and g[i] <= 1 + max(g[:i]); these are exactly the
    canonical labellings, and they come out in lexicographic order.
    """

    if n == 0:
        yield ()
        return

    labels = [0] * n
    maxima = [0] * n

    while True:
        yield tuple(labels)

        # find the rightmost position that can still be incremented
        i = n - 1
        while i > 0 and labels[i] > maxima[i - 1]:
            i -= 1
        if i == 0:
            return

        labels[i] += 1
        maxima[i] = max(maxima[i - 1], labels[i])
        for j in range(i + 1, n):
            labels[j] = 0
            maxima[j] = maxima[i]


def bell_number(n: int) -> int:
    """The number of partitions of an n-element set"""

    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def equivalences(ambient: SortedSet) -> Iterator[SortedEquivalence]:
    """Yields every sorted equivalence on ambient, one partition per sort"""

    sorts = ambient.sorts
    per_sort = [list(restricted_growth(ambient.size(s))) for s in sorts]
    for choice in itertools.product(*per_sort):
        yield SortedEquivalence.from_labels(ambient, dict(zip(sorts, choice)))


def count_equivalences(ambient: SortedSet) -> int:
    total = 1
    for s in ambient.sorts:
        total *= bell_number(ambient.size(s))
    return total


class UnionFind(object):
    """
    Disjoint sets with union by rank and path compression.

    Only used inside algorithms; results are handed out as SortedEquivalence.
    """

    def __init__(self):
        self.parent: Dict[Hashable, Hashable] = {}
        self.rank: Counter = Counter()

    def find(self, x: Hashable) -> Hashable:
        root = self.parent.setdefault(x, x)
        while root != self.parent[root]:
            root = self.parent[root]

        # path compression
        while x != root:
            x, self.parent[x] = self.parent[x], root
        return root

    def union(self, x: Hashable, y: Hashable) -> bool:
        """Merges the sets of x and y. Returns True iff they were distinct"""

        px = self.find(x)
        py = self.find(y)
        if px == py:
            return False

        if self.rank[px] == self.rank[py]:
            self.parent[py] = px
            self.rank[px] += 1
        elif self.rank[px] > self.rank[py]:
            self.parent[py] = px
        else:
            self.parent[px] = py
        return True

    def to_equivalence(self, ambient: SortedSet) -> SortedEquivalence:
        """Reads the sets off as an equivalence; keys are (sort, element) pairs"""

        return SortedEquivalence.from_labels(
            ambient,
            {s: [self.find((s, x)) for x in c] for (s, c) in ambient.items()},
        )
