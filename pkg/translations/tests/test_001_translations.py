from django.test import SimpleTestCase

from finite_algebra.algebra import Homomorphism
from finite_algebra.congruences import is_congruence
from finite_algebra.constructions import inclusion, product, restrict
from sorted_core.errors import AmbientMismatch, NoPreimage, SortMismatch
from sorted_core.partitions import equivalences
from sorted_core.sets import SortedSubset
from translations.translations import (
    HOLE,
    ElementaryTranslation,
    IdentityTranslation,
    Translation,
    enumerate_translations_as_functions,
    inverse_image_translation,
    is_closed_under_translations,
    iter_elementary,
    lift_translation,
    transport,
)

from SortedAlgebra.tests.fixtures import AND3, CYC2, CYC4, SMALL, SWAP, XOR

MOD2 = Homomorphism.build(CYC4, CYC2, {"s": {"0": "0", "1": "1", "2": "0", "3": "1"}})


class ElementaryTest(SimpleTestCase):
    def test_counts(self):
        self.assertEqual(len(list(iter_elementary(CYC4))), 1)
        self.assertEqual(len(list(iter_elementary(XOR))), 4)
        self.assertEqual(len(list(iter_elementary(SWAP))), 2)
        self.assertEqual(len(list(iter_elementary(SWAP, "b"))), 0, "No operation takes b")

    def test_describe_and_apply(self):
        E = next(iter_elementary(XOR))
        self.assertEqual(E.describe(), "m({},0)".format(HOLE))
        self.assertEqual([E(x) for x in ("0", "1")], ["0", "1"])

    def test_rejects_bad_shapes(self):
        m = XOR.signature.op("m")
        with self.assertRaises(SortMismatch):
            ElementaryTranslation(XOR, m, 0, ("1", "1"))
        with self.assertRaises(SortMismatch):
            ElementaryTranslation(XOR, m, 2, (None, "1"))
        with self.assertRaises(SortMismatch):
            ElementaryTranslation(XOR, m, 0, (None, "7"))
        with self.assertRaises(SortMismatch):
            ElementaryTranslation(CYC2, CYC2.signature.op("c"), 0, ())

    def test_chains_must_match_sorts(self):
        steps = {E.op.name: E for E in iter_elementary(SWAP)}
        (p, g) = (steps["p"], steps["g"])
        self.assertEqual(Translation(SWAP, (g, p)).vector, ("1", "0"))
        with self.assertRaises(SortMismatch):
            Translation(SWAP, (p, g))
        with self.assertRaises(SortMismatch):
            IdentityTranslation(SWAP, "b").then(g)


class TranslationFunctionsTest(SimpleTestCase):
    def test_cyclic_shifts(self):
        functions = enumerate_translations_as_functions(CYC4, "s")["s"]
        self.assertEqual(len(functions), 4)
        self.assertTrue(functions[0].is_identity, "The identity comes first")
        self.assertEqual(
            sorted(T.vector for T in functions),
            [("0", "1", "2", "3"), ("1", "2", "3", "0"), ("2", "3", "0", "1"), ("3", "0", "1", "2")],
        )

    def test_meets_on_a_chain(self):
        functions = enumerate_translations_as_functions(AND3, "s")["s"]
        self.assertEqual(
            sorted(T.vector for T in functions),
            [("0", "0", "0"), ("0", "1", "1"), ("0", "1", "2")],
        )

    def test_across_sorts(self):
        from_e = enumerate_translations_as_functions(SWAP, "e")
        self.assertEqual(len(from_e["e"]), 2)
        self.assertEqual(len(from_e["b"]), 2)
        from_b = enumerate_translations_as_functions(SWAP, "b")
        self.assertEqual((len(from_b["b"]), len(from_b["e"])), (1, 0))


class ClosureDecisionTest(SimpleTestCase):
    def test_agrees_with_congruences(self):
        for A in SMALL:
            for Phi in equivalences(A.carriers):
                expected = is_congruence(A, Phi)
                self.assertEqual(is_closed_under_translations(A, Phi), expected, A.name)
                self.assertEqual(
                    is_closed_under_translations(A, Phi, elementary_only=False),
                    expected,
                    "{}: all translations agree with the elementary ones".format(A.name),
                )

    def test_ambient_mismatch(self):
        (Phi, *_) = equivalences(CYC2.carriers)
        with self.assertRaises(AmbientMismatch):
            is_closed_under_translations(CYC4, Phi)


class TransportTest(SimpleTestCase):
    def test_transport_commutes(self):
        for T in enumerate_translations_as_functions(CYC4, "s")["s"]:
            U = transport(MOD2, T)
            for x in CYC4.carriers.carrier("s"):
                self.assertEqual(MOD2.image("s", T(x)), U(MOD2.image("s", x)))

    def test_lift_through_projection(self):
        P, (first, _) = product([XOR, XOR])
        for U in enumerate_translations_as_functions(XOR, "s")["s"]:
            T = lift_translation(first, U)
            self.assertEqual(T.algebra, P)
            self.assertEqual(transport(first, T).describe(), U.describe())

    def test_lift_needs_preimages(self):
        X = SortedSubset.delta(AND3.carriers, "s", ["0", "2"])
        f = inclusion(restrict(AND3, X), AND3)
        middle = [E for E in iter_elementary(AND3) if E.frozen == (None, "1")]
        with self.assertRaises(NoPreimage):
            lift_translation(f, Translation(AND3, tuple(middle)))

    def test_inverse_image(self):
        (shift,) = [T for T in enumerate_translations_as_functions(CYC4, "s")["s"] if T("0") == "2"]
        L = SortedSubset.delta(CYC4.carriers, "s", ["0"])
        self.assertEqual(inverse_image_translation(shift, L).ordered("s"), ("2",))
