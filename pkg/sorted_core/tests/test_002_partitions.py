from django.test import SimpleTestCase

from sorted_core.partitions import (
    UnionFind,
    bell_number,
    count_equivalences,
    equivalences,
    restricted_growth,
)
from sorted_core.sets import SortedEquivalence, SortedSet


class RestrictedGrowthTest(SimpleTestCase):
    def test_counts_are_bell_numbers(self):
        for n in range(7):
            strings = list(restricted_growth(n))
            self.assertEqual(len(strings), bell_number(n), "One string per partition")
            self.assertEqual(len(set(strings)), len(strings), "No partition twice")
            self.assertEqual(strings, sorted(strings), "Lexicographic order")

    def test_small_cases(self):
        self.assertEqual(list(restricted_growth(0)), [()])
        self.assertEqual(
            list(restricted_growth(3)),
            [(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 1, 2)],
        )
        self.assertEqual([bell_number(n) for n in range(6)], [1, 1, 2, 5, 15, 52])


class EquivalencesTest(SimpleTestCase):
    def test_product_over_sorts(self):
        ambient = SortedSet({"e": ["a", "b", "c"], "b": ["0", "1"], "z": []})
        found = list(equivalences(ambient))
        self.assertEqual(len(found), count_equivalences(ambient))
        self.assertEqual(len(found), 5 * 2, "Partitions multiply across sorts")

    def test_canonical_form(self):
        ambient = SortedSet({"s": ["a", "b", "c"]})
        Phi = SortedEquivalence(ambient, {"s": [["c", "a"], ["b"]]})
        Psi = SortedEquivalence.from_labels(ambient, {"s": ["x", "y", "x"]})
        self.assertEqual(Phi, Psi, "Equal partitions are equal regardless of how they were written")
        self.assertEqual(Phi.blocks("s"), (("a", "c"), ("b",)))
        self.assertEqual(Phi.labels("s"), (0, 1, 0))
        self.assertTrue(SortedEquivalence.identity(ambient).refines(Phi))
        self.assertTrue(Phi.refines(SortedEquivalence.total(ambient)))
        self.assertFalse(SortedEquivalence.total(ambient).refines(Phi))


class UnionFindTest(SimpleTestCase):
    def test_union(self):
        uf = UnionFind()
        self.assertTrue(uf.union(("s", "a"), ("s", "b")))
        self.assertFalse(uf.union(("s", "b"), ("s", "a")), "A second union of the same sets is a no-op")
        uf.union(("s", "c"), ("s", "d"))
        uf.union(("s", "a"), ("s", "d"))
        self.assertEqual(uf.find(("s", "b")), uf.find(("s", "c")))

        ambient = SortedSet({"s": ["a", "b", "c", "d", "e"]})
        Phi = uf.to_equivalence(ambient)
        self.assertEqual(Phi.blocks("s"), (("a", "b", "c", "d"), ("e",)))
