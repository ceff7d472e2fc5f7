import random

from django.test import SimpleTestCase

from finite_algebra.algebra import Homomorphism
from finite_algebra.congruences import enumerate_congruences
from finite_algebra.homs import ALL, EPI, enumerate_homs
from sorted_core.errors import AmbientMismatch
from sorted_core.operations import (
    inverse_image,
    inverse_image_equiv,
    is_saturated,
    meet_all,
    subsets,
)
from sorted_core.sets import SortedEquivalence, SortedSubset
from syntactic.omega import (
    characteristic_kernel,
    class_description,
    is_isotone,
    isotone_report,
    meet_preserving,
    omega_finite,
    recover_congruence,
)
from translations.translations import (
    enumerate_translations_as_functions,
    inverse_image_translation,
)

from SortedAlgebra.tests.fixtures import AND3, CYC2, CYC4, ONE, SMALL, SWAP

MOD2 = Homomorphism.build(CYC4, CYC2, {"s": {"0": "0", "1": "1", "2": "0", "3": "1"}})


def delta(A, sort, *elements):
    return SortedSubset.delta(A.carriers, sort, list(elements))


def refines_at(Phi, Psi, sort):
    return all(
        set(Phi.block_of(sort, a)) <= set(Psi.block_of(sort, a))
        for a in Phi.ambient.carrier(sort)
    )


def hom_pairs():
    for A in SMALL:
        for B in SMALL:
            if A.signature == B.signature:
                yield (A, B)


def epimorphisms(limit=200):
    found = []
    for (A, B) in hom_pairs():
        found.extend(enumerate_homs(A, B, EPI))
    return found[:limit]


def non_epimorphisms(per_pair=10):
    found = []
    for (A, B) in hom_pairs():
        others = [f for f in enumerate_homs(A, B, ALL) if not f.is_surjective()]
        found.extend(others[:per_pair])
    return found


def translation_meet(f, M, sort):
    """The meet of the omegas of f^{-1}[U^{-1}[M]] over every translation U with hole sort sort"""

    B = f.target
    family = [
        omega_finite(f.source, inverse_image(f.mapping, inverse_image_translation(U, M)))
        for translations in enumerate_translations_as_functions(B, sort).values()
        for U in translations
    ]
    return meet_all(f.source.carriers, family)


class OmegaTest(SimpleTestCase):
    def test_greatest_congruence_saturating(self):
        for A in SMALL:
            congruences = enumerate_congruences(A)
            for L in subsets(A.carriers):
                Omega = omega_finite(A, L)
                below = [
                    Phi for Phi in congruences if Phi.refines(characteristic_kernel(L))
                ]
                self.assertIn(Omega, below, "{}: omega is a congruence saturating L".format(A.name))
                for Phi in below:
                    self.assertTrue(Phi.refines(Omega), "{}: omega is the greatest".format(A.name))
                self.assertTrue(is_saturated(L, Omega))

    def test_saturated_exactly_below_omega(self):
        for A in SMALL:
            congruences = enumerate_congruences(A)
            for L in subsets(A.carriers):
                Omega = omega_finite(A, L)
                for Phi in congruences:
                    self.assertEqual(
                        is_saturated(L, Phi),
                        Phi.refines(Omega),
                        "{}: L is saturated by exactly the congruences below its omega".format(A.name),
                    )

    def test_complement_has_the_same_omega(self):
        for A in SMALL:
            for L in subsets(A.carriers):
                self.assertEqual(omega_finite(A, L), omega_finite(A, L.complement()), A.name)

    def test_meet_of_omegas_below_omega_of_intersection(self):
        rng = random.Random(7)
        for A in SMALL:
            family = list(subsets(A.carriers))
            omegas = {L: omega_finite(A, L) for L in family}
            for _ in range(40):
                chosen = rng.sample(family, min(len(family), rng.randint(2, 4)))
                common = chosen[0]
                for L in chosen[1:]:
                    common = common.intersection(L)
                self.assertTrue(
                    meet_all(A.carriers, [omegas[L] for L in chosen]).refines(omegas[common]),
                    "{}: {}".format(A.name, chosen),
                )

    def test_cyclic(self):
        self.assertTrue(omega_finite(CYC4, delta(CYC4, "s", "0")).is_identity())
        self.assertEqual(
            omega_finite(CYC4, delta(CYC4, "s", "0", "2")),
            SortedEquivalence(CYC4.carriers, {"s": [["0", "2"], ["1", "3"]]}),
        )
        self.assertTrue(omega_finite(CYC4, SortedSubset.empty(CYC4.carriers)).is_total())
        self.assertTrue(omega_finite(CYC4, SortedSubset.full(CYC4.carriers)).is_total())

    def test_other_sorts_follow(self):
        Omega = omega_finite(SWAP, delta(SWAP, "b", "1"))
        self.assertTrue(Omega.is_identity(), "p separates a0 from a1 through b")
        self.assertTrue(omega_finite(SWAP, delta(SWAP, "e", "a0", "a1")).is_total())

    def test_ambient_mismatch(self):
        with self.assertRaises(AmbientMismatch):
            omega_finite(CYC4, delta(CYC2, "s", "0"))


class PullbackTest(SimpleTestCase):
    def test_equal_along_every_epimorphism(self):
        epis = epimorphisms()
        self.assertIn(MOD2, epis)
        for f in epis:
            for M in subsets(f.target.carriers):
                self.assertEqual(
                    omega_finite(f.source, inverse_image(f.mapping, M)),
                    inverse_image_equiv(f.mapping, omega_finite(f.target, M)),
                    repr(f),
                )

    def test_below_along_other_homomorphisms(self):
        strict = []
        for f in non_epimorphisms():
            for M in subsets(f.target.carriers):
                pulled = inverse_image_equiv(f.mapping, omega_finite(f.target, M))
                Omega = omega_finite(f.source, inverse_image(f.mapping, M))
                self.assertTrue(pulled.refines(Omega), repr(f))
                if pulled != Omega:
                    strict.append((f, M))
        self.assertTrue(strict, "Some pullback is strictly finer")

    def test_strict_through_a_missed_parameter(self):
        f = Homomorphism.build(AND3, AND3, {"s": {"0": "0", "1": "2", "2": "2"}})
        M = delta(AND3, "s", "1")
        self.assertTrue(omega_finite(AND3, inverse_image(f.mapping, M)).is_total())
        pulled = inverse_image_equiv(f.mapping, omega_finite(AND3, M))
        self.assertFalse(pulled.related("s", "0", "1"), "min(-, 1) separates 0 from 2 in the target")

    def test_sortwise_through_translations(self):
        for (homs, equal) in ((epimorphisms(), True), (non_epimorphisms(), False)):
            for f in homs:
                for M in subsets(f.target.carriers):
                    pulled = inverse_image_equiv(f.mapping, omega_finite(f.target, M))
                    for t in f.source.signature.sorts:
                        meet = translation_meet(f, M, t)
                        self.assertTrue(refines_at(pulled, meet, t), "{} at {}".format(f, t))
                        if equal:
                            self.assertTrue(refines_at(meet, pulled, t), "{} at {}".format(f, t))


class ClassDescriptionTest(SimpleTestCase):
    def test_parity(self):
        description = class_description(CYC4, delta(CYC4, "s", "0", "2"), "s", "2")
        self.assertEqual(description.reconstructed, frozenset({"0", "2"}))
        self.assertIn(frozenset({"0", "2"}), description.positive)
        self.assertIn(frozenset({"1", "3"}), description.negative)

    def test_reconstructs_every_class(self):
        for A in SMALL:
            for L in subsets(A.carriers):
                Omega = omega_finite(A, L)
                for s in A.signature.sorts:
                    for a in A.carriers.carrier(s):
                        self.assertEqual(
                            class_description(A, L, s, a).reconstructed,
                            frozenset(Omega.block_of(s, a)),
                            "{} at {}".format(A.name, a),
                        )


class RecoveryTest(SimpleTestCase):
    def test_recover_every_congruence(self):
        for A in SMALL:
            for Phi in enumerate_congruences(A):
                self.assertEqual(recover_congruence(A, Phi), Phi, A.name)


class IsotoneTest(SimpleTestCase):
    def test_trivial_algebra(self):
        self.assertTrue(is_isotone(ONE))
        self.assertTrue(meet_preserving(ONE))

    def test_empty_set_breaks_both(self):
        report = isotone_report(CYC2)
        self.assertFalse(report.isotone)
        self.assertFalse(report.meet_preserving)
        (L, M) = report.isotone_witness
        self.assertTrue(L.issubset(M))
        self.assertIsNotNone(report.meet_witness)
