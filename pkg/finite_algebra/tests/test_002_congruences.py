from django.test import SimpleTestCase

from finite_algebra.algebra import Homomorphism
from finite_algebra.congruences import (
    congruence_generated,
    enumerate_congruences,
    factor_map,
    is_congruence,
    kernel,
    quotient_algebra,
    universal_factor,
)
from finite_algebra.constructions import image
from finite_algebra.errors import NotACongruence
from finite_algebra.homs import ALL, EPI, enumerate_homs
from finite_algebra.isomorphism import are_isomorphic
from sorted_core.errors import BoundExceeded, RefinementViolation
from sorted_core.limits import Limits
from sorted_core.partitions import equivalences
from sorted_core.sets import SortedEquivalence

from SortedAlgebra.tests.fixtures import (
    AND3,
    CONST2,
    CYC2,
    CYC4,
    EMPTY_E,
    ID3,
    ID4,
    ONE,
    SMALL,
    SWAP,
    XOR,
)

MOD2 = SortedEquivalence(CYC4.carriers, {"s": [["0", "2"], ["1", "3"]]})


class EnumerateCongruencesTest(SimpleTestCase):
    def test_agrees_with_brute_force(self):
        for A in SMALL:
            expected = [Phi for Phi in equivalences(A.carriers) if is_congruence(A, Phi)]
            self.assertEqual(
                enumerate_congruences(A),
                expected,
                "{} congruences in canonical order".format(A.name),
            )

    def test_counts(self):
        counts = {
            ONE: 1,
            CYC2: 2,
            CYC4: 3,
            ID3: 5,
            CONST2: 2,
            SWAP: 3,
            EMPTY_E: 2,
            XOR: 2,
            AND3: 4,
        }
        for (A, n) in counts.items():
            self.assertEqual(len(enumerate_congruences(A)), n, A.name)

    def test_identity_and_total_are_congruences(self):
        for A in SMALL:
            found = enumerate_congruences(A)
            self.assertIn(SortedEquivalence.identity(A.carriers), found)
            self.assertIn(SortedEquivalence.total(A.carriers), found)

    def test_bound(self):
        with self.assertRaises(BoundExceeded) as cm:
            enumerate_congruences(ID4, limits=Limits.from_settings(max_carrier=3))
        self.assertEqual(cm.exception.bound, 3)

    def test_swap_couples_the_sorts(self):
        glued = SortedEquivalence(SWAP.carriers, {"e": [["a0", "a1"]], "b": [["0"], ["1"]]})
        self.assertFalse(is_congruence(SWAP, glued), "p separates a0 and a1")


class GeneratedCongruenceTest(SimpleTestCase):
    def test_cyclic(self):
        self.assertEqual(congruence_generated(CYC4, [("s", "0", "2")]), MOD2)
        self.assertTrue(congruence_generated(CYC4, [("s", "0", "1")]).is_total())
        self.assertTrue(congruence_generated(CYC4, []).is_identity())

    def test_least(self):
        for A in SMALL:
            for s in A.signature.sorts:
                carrier = A.carriers.carrier(s)
                if len(carrier) < 2:
                    continue
                pair = (s, carrier[0], carrier[-1])
                Theta = congruence_generated(A, [pair])
                self.assertTrue(is_congruence(A, Theta))
                for Phi in enumerate_congruences(A):
                    if Phi.related(*pair):
                        self.assertTrue(Theta.refines(Phi), "{} at {}".format(A.name, s))

    def test_propagates_across_sorts(self):
        Theta = congruence_generated(SWAP, [("e", "a0", "a1")])
        self.assertTrue(Theta.related("b", "0", "1"))


class QuotientTest(SimpleTestCase):
    def test_quotient_by_mod2(self):
        Q, pr = quotient_algebra(CYC4, MOD2)
        self.assertEqual(Q.carriers.carrier("s"), ("0", "1"), "Named by representatives")
        self.assertIsNotNone(are_isomorphic(Q, CYC2))
        self.assertIsNone(pr.violation())
        self.assertTrue(pr.is_surjective())
        self.assertEqual(kernel(pr), MOD2)

    def test_not_a_congruence(self):
        Phi = SortedEquivalence(CYC4.carriers, {"s": [["0", "1"], ["2"], ["3"]]})
        with self.assertRaises(NotACongruence):
            quotient_algebra(CYC4, Phi)

    def test_universal_factor(self):
        f = Homomorphism.build(CYC4, CYC2, {"s": {"0": "0", "1": "1", "2": "0", "3": "1"}})
        p = universal_factor(f, MOD2)
        self.assertTrue(p.is_isomorphism())
        with self.assertRaises(RefinementViolation):
            universal_factor(f, SortedEquivalence.total(CYC4.carriers))

    def test_factor_map(self):
        delta = SortedEquivalence.identity(CYC4.carriers)
        nabla = SortedEquivalence.total(CYC4.carriers)
        onto = factor_map(CYC4, delta, MOD2)
        self.assertTrue(onto.is_surjective())
        self.assertEqual(onto.target.size("s"), 2)
        self.assertEqual(factor_map(CYC4, MOD2, nabla).target.size("s"), 1)


class KernelTest(SimpleTestCase):
    def homs(self, kind=ALL):
        for A in SMALL:
            for B in SMALL:
                if A.signature == B.signature:
                    yield from enumerate_homs(A, B, kind)

    def test_kernels_are_congruences(self):
        for f in self.homs():
            self.assertTrue(is_congruence(f.source, kernel(f)), repr(f))

    def test_quotient_by_kernel_is_the_image(self):
        for f in self.homs():
            Q, _ = quotient_algebra(f.source, kernel(f))
            self.assertIsNotNone(are_isomorphic(Q, image(f)), repr(f))

    def test_quotient_by_kernel_of_an_epimorphism(self):
        epis = list(self.homs(EPI))
        self.assertTrue(epis)
        for f in epis:
            Q, _ = quotient_algebra(f.source, kernel(f))
            self.assertIsNotNone(are_isomorphic(Q, f.target), repr(f))
            self.assertTrue(
                universal_factor(f, kernel(f)).is_isomorphism(),
                "The induced map out of the quotient by the kernel is bijective",
            )
