import itertools
from collections import Counter

from django.test import SimpleTestCase

from finite_algebra.algebra import FiniteAlgebra
from finite_algebra.constructions import product
from finite_algebra.generate import enumerate_algebras
from formations.closure import (
    H,
    PFSD,
    SEED,
    SHSK,
    STANDARD,
    Generation,
    candidates,
    formation_closure,
    formation_join,
    formation_meet,
    is_formation,
    subfinal_pool,
)
from formations.pools import AlgebraPool
from sorted_core.errors import BoundExceeded
from sorted_core.limits import Limits

from SortedAlgebra.tests.fixtures import CONST2, CYC2, CYC4, ID2, ID3, ID4, ONE, SIG1


def closure(bound, *seeds):
    return formation_closure(AlgebraPool(SIG1, bound, seeds, name="seed"))


def unary(name, f):
    """c = 0 and f given by its images of 0, 1, ..."""
    return FiniteAlgebra.from_functions(
        SIG1,
        {"s": [str(i) for i in range(len(f))]},
        {"c": lambda: "0", "f": lambda x: f[int(x)]},
        name=name,
    )


SQUARE, _ = product([CYC2, CYC2])
# a 2-cycle through c next to fixed points, and the other way round
CYCLE_AND_POINT = unary("CYCLE_AND_POINT", ["1", "0", "2"])
POINT_AND_CYCLE = unary("POINT_AND_CYCLE", ["0", "2", "1"])
CYCLE_AND_TWO_POINTS = unary("CYCLE_AND_TWO_POINTS", ["1", "0", "2", "3"])
POINT_CYCLE_POINT = unary("POINT_CYCLE_POINT", ["0", "2", "1", "3"])

CYCLIC_FOUR_CLOSURE = [
    ONE,
    CYC2,
    ID2,
    CYCLE_AND_POINT,
    POINT_AND_CYCLE,
    ID3,
    CYC4,
    SQUARE,
    ID4,
    CYCLE_AND_TWO_POINTS,
    POINT_CYCLE_POINT,
]


class FormationClosureTest(SimpleTestCase):
    def test_cyclic_two(self):
        progress = []
        report = formation_closure(
            AlgebraPool(SIG1, 2, [CYC2]), on_progress=lambda r, n: progress.append((r, n))
        )
        closed = report.closed
        self.assertEqual(len(closed), 2)
        self.assertIn(ONE, closed)
        self.assertIn(CYC2, closed)
        self.assertEqual(report.generations[0], Generation(0, SEED, "CYC2"))
        self.assertEqual(progress[-1], (report.rounds, 2))

    def test_escape(self):
        report = closure(2, CYC2)
        self.assertFalse(report.saturated_at_bound, "CYC2xCYC2 does not fit")
        self.assertEqual(report.escape.factors, ("CYC2", "CYC2"))
        self.assertEqual(report.escape.size, 4)
        self.assertEqual(report.escape.algebra, product([CYC2, CYC2])[0])

    def test_cyclic_four(self):
        report = closure(4, CYC4)
        for A in (ONE, CYC2, CYC4, SQUARE, ID2):
            self.assertIn(A, report.closed, str(A))
        self.assertNotIn(CONST2, report.closed)
        for mode in (STANDARD, SHSK):
            self.assertTrue(is_formation(report.closed, mode).holds, mode)

    def test_cyclic_four_members(self):
        report = closure(4, CYC4)
        expected = AlgebraPool(SIG1, 4, CYCLIC_FOUR_CLOSURE)
        self.assertEqual(len(expected), 11)
        self.assertEqual(
            report.closed,
            expected,
            "Every permutation algebra with cycles of length 1, 2 or 4 and c on one of them",
        )
        self.assertEqual(report.rounds, 3)
        self.assertEqual(report.escape.size, 6, "Two members of size 2 and 3 make the smallest escape")

    def test_cyclic_four_trace(self):
        generations = closure(4, CYC4).generations
        self.assertEqual(
            Counter((g.step, g.rule) for g in generations),
            {(0, SEED): 1, (1, H): 2, (1, PFSD): 1, (2, H): 3, (2, PFSD): 4},
        )
        self.assertEqual({g.origin for g in generations if g.rule == H and g.step == 1}, {"CYC4"})
        self.assertEqual({g.origin for g in generations if g.rule == H and g.step == 2}, {"sd4_3"})
        self.assertEqual(
            [g.member for g in generations if g.rule == PFSD],
            ["sd4_3", "sd3_7", "sd4_8", "sd4_9", "sd4_10"],
        )

        closed = closure(4, CYC4).closed
        self.assertEqual(closed.find(SQUARE).name, "sd4_3")
        self.assertEqual(closed.find(ID3).name, "sd3_7")
        self.assertEqual(closed.find(ID4).name, "sd4_8")
        self.assertEqual(closed.find(CYC4).name, "CYC4")

    def test_closure_is_idempotent(self):
        for closed in (closure(3, CYC2).closed, closure(4, CYC4).closed):
            self.assertEqual(formation_closure(closed).closed, closed)

    def test_least_formation(self):
        pool = subfinal_pool(SIG1, 3)
        self.assertEqual(len(pool), 1)
        self.assertIn(ONE, pool)

    def test_join_and_meet(self):
        P = closure(2, CYC2).closed
        Q = closure(2, ID2).closed
        self.assertEqual(len(formation_join(P, Q)), 3)
        meet = formation_meet(P, Q)
        self.assertEqual(len(meet), 1)
        self.assertIn(ONE, meet)
        self.assertTrue(is_formation(meet).holds)


class CandidatesTest(SimpleTestCase):
    def test_cached_per_candidate_limit(self):
        generous = Limits.from_settings()
        self.assertEqual(len(candidates(SIG1, 2, limits=generous)), 5)
        with self.assertRaises(BoundExceeded):
            candidates(SIG1, 2, limits=generous.override(max_candidates=5))
        self.assertIs(
            candidates(SIG1, 2, limits=generous),
            candidates(SIG1, 2, limits=generous),
            "Repeated calls share the generated algebras",
        )


class IsFormationTest(SimpleTestCase):
    def test_missing_product(self):
        pool = AlgebraPool(SIG1, 4, [ONE, CYC2])
        self.assertTrue(is_formation(pool, STANDARD).failed("P_fsd"))
        self.assertTrue(is_formation(pool, SHSK).failed("shsk"))

    def test_missing_quotient(self):
        verdict = is_formation(AlgebraPool(SIG1, 4, [CYC4]))
        self.assertTrue(verdict.failed("H"))
        self.assertEqual(verdict.failures[0].witness.total_size, 1, "ONE comes first")

    def test_empty_pool(self):
        self.assertTrue(is_formation(AlgebraPool(SIG1, 2)).failed("nonempty"))

    def test_unknown_mode(self):
        with self.assertRaises(ValueError):
            is_formation(AlgebraPool(SIG1, 2, [ONE]), "lattice")

    def test_modes_agree_on_small_pools(self):
        small = enumerate_algebras(SIG1, 2)
        pools = [
            AlgebraPool(SIG1, bound, members)
            for bound in (2, 3)
            for k in range(len(small) + 1)
            for members in itertools.combinations(small, k)
        ]
        outcomes = set()
        for pool in pools:
            standard = is_formation(pool, STANDARD).holds
            self.assertEqual(standard, is_formation(pool, SHSK).holds, repr(pool))
            outcomes.add(standard)
        self.assertEqual(outcomes, {True, False})

    def test_modes_agree(self):
        others = enumerate_algebras(SIG1, 3)
        pools = []
        for seed in (CYC2, CYC4, ID3):
            closed = closure(4, seed).closed
            pools.append(closed)
            pools.extend(closed.without(A) for A in closed)
            pools.extend(closed.with_members([B]) for B in others if not closed.contains(B))
        self.assertGreaterEqual(len(pools), 50)

        outcomes = Counter()
        for pool in pools:
            standard = is_formation(pool, STANDARD).holds
            self.assertEqual(standard, is_formation(pool, SHSK).holds, repr(pool))
            outcomes[standard] += 1
        self.assertGreaterEqual(outcomes[True], 3, "The closures themselves")
        self.assertGreater(outcomes[False], 0)
