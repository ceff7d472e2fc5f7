from django.test import SimpleTestCase

from finite_algebra.algebra import FiniteAlgebra
from formations.pools import AlgebraPool, label
from formations.verdicts import Budget, Verdict
from sorted_core.errors import AmbientMismatch, BoundExceeded
from sorted_core.limits import Limits

from SortedAlgebra.tests.fixtures import CONST2, CYC2, CYC4, ID2, ONE, SIG1, SWAP

# CYC2 with its elements renamed
FLIP = FiniteAlgebra.from_functions(
    SIG1,
    {"s": ["b", "a"]},
    {"c": lambda: "b", "f": lambda x: {"a": "b", "b": "a"}[x]},
    name="FLIP",
)


class AlgebraPoolTest(SimpleTestCase):
    def test_members_up_to_isomorphism(self):
        pool = AlgebraPool(SIG1, 2, [CYC2, FLIP, ONE])
        self.assertEqual(len(pool), 2)
        self.assertEqual(pool.names(), ["ONE", "CYC2"], "Smaller profiles first")
        self.assertIn(FLIP, pool)
        self.assertIs(pool.find(FLIP), CYC2, "The first algebra of a class is kept")
        self.assertNotIn(ID2, pool)
        self.assertNotIn(CYC4, pool, "Beyond the bound")

    def test_rejects_large_members(self):
        with self.assertRaises(BoundExceeded) as cm:
            AlgebraPool(SIG1, 2, [CYC4])
        self.assertIs(cm.exception.witness, CYC4)

    def test_rejects_foreign_signature(self):
        with self.assertRaises(AmbientMismatch):
            AlgebraPool(SIG1, 4, [SWAP])

    def test_member_limit(self):
        with self.assertRaises(BoundExceeded):
            AlgebraPool(SIG1, 2, [ONE, CYC2], limits=Limits.from_settings(max_algebras=1))

    def test_set_operations(self):
        P = AlgebraPool(SIG1, 2, [ONE, CYC2])
        Q = AlgebraPool(SIG1, 4, [CYC2, ID2, CYC4])
        self.assertCountEqual(P.union(Q).names(), ["ONE", "CYC2", "ID2"], "CYC4 does not fit into P")
        self.assertEqual(P.intersection(Q).names(), ["CYC2"])
        self.assertEqual(P.without(FLIP).names(), ["ONE"])
        self.assertTrue(P.without(ONE).issubset(Q))
        self.assertFalse(P.issubset(Q))
        self.assertEqual(P, AlgebraPool(SIG1, 2, [FLIP, ONE]), "Equality ignores names")

    def test_anonymous_labels(self):
        pool = AlgebraPool(SIG1, 2, [CONST2.renamed(None)])
        self.assertEqual(label(pool.members[0], 0), "A2_0")
        self.assertEqual(pool.names(), ["A2_0"])


class VerdictTest(SimpleTestCase):
    def test_fail(self):
        verdict = Verdict("demo")
        self.assertTrue(verdict.holds)
        verdict.fail("H", "missing", CYC2)
        self.assertFalse(verdict)
        self.assertTrue(verdict.failed("H"))
        self.assertFalse(verdict.failed("P_fsd"))

    def test_budget(self):
        budget = Budget(2)
        self.assertEqual([budget.spend() for _ in range(3)], [True, True, False])
        self.assertTrue(budget.exhausted)
