import random

from django.test import SimpleTestCase

from finite_algebra.algebra import Homomorphism
from signature_terms.free import (
    Substitution,
    enumerate_terms,
    evaluate,
    evaluate_substitution,
    free_hom,
    lift_through_epi,
    random_term,
)
from signature_terms.parser import parse_term, print_term
from sorted_core.errors import BoundExceeded, NoPreimage, SortMismatch
from sorted_core.sets import SortedMap, compose

from SortedAlgebra.tests.fixtures import BIN, CYC2, CYC4, ID2, SIG1, SIG2, X1, X2, generators


def assign(gens, algebra, **images):
    return SortedMap(gens, algebra.carriers, {"s": images})


class EvaluateTest(SimpleTestCase):
    def test_cyclic(self):
        a = assign(X1, CYC4, x="1")
        self.assertEqual(evaluate(parse_term("(f (f (c)))", SIG1, X1), CYC4, a), "2")
        self.assertEqual(evaluate(parse_term("(f (f (f (x))))", SIG1, X1), CYC4, a), "0")

    def test_deep_terms_do_not_recurse(self):
        t = parse_term("(x)", SIG1, X1)
        for _ in range(5000):
            t = t.__class__("f", "s", (t,))
        self.assertEqual(evaluate(t, CYC4, assign(X1, CYC4, x="0")), "0", "5000 steps of +1 mod 4")
        self.assertEqual(t.depth(), 5001)


class SubstitutionTest(SimpleTestCase):
    def setUp(self):
        self.g = free_hom(X2, X1, {"x": parse_term("(f (x))", SIG1, X1), "y": parse_term("(c)", SIG1, X1)})

    def test_apply(self):
        t = parse_term("(f (y))", SIG1, X2)
        self.assertEqual(print_term(self.g(t)), "(f (c))")
        self.assertEqual(print_term(self.g(parse_term("(f (x))", SIG1, X2))), "(f (f (x)))")

    def test_identity_and_compose(self):
        identity = Substitution.identity(X1)
        self.assertEqual(identity.compose(self.g), self.g, "The identity is neutral on the left")
        self.assertEqual(self.g.compose(Substitution.identity(X2)), self.g)

        twice = Substitution(X1, X1, {"x": parse_term("(f (f (x)))", SIG1, X1)})
        composed = twice.compose(self.g)
        self.assertEqual(print_term(composed.image("x")), "(f (f (f (x))))")
        with self.assertRaises(SortMismatch):
            self.g.compose(twice)

    def test_images_are_checked(self):
        with self.assertRaises(SortMismatch):
            Substitution(X1, X1, {})
        with self.assertRaises(SortMismatch):
            Substitution(X1, X1, {"x": parse_term("(y)", SIG1, X2)})

    def test_evaluate_substitution(self):
        a = assign(X1, CYC4, x="1")
        b = evaluate_substitution(self.g, CYC4, a)
        self.assertEqual((b.image("s", "x"), b.image("s", "y")), ("2", "0"))

        # evaluating g(t) under a is evaluating t under the composite
        t = parse_term("(f (x))", SIG1, X2)
        self.assertEqual(evaluate(self.g(t), CYC4, a), evaluate(t, CYC4, b))


class LiftTest(SimpleTestCase):
    def test_lift_through_epi(self):
        mod2 = Homomorphism.build(CYC4, CYC2, {"s": {"0": "0", "1": "1", "2": "0", "3": "1"}})
        g = assign(X2, CYC2, x="1", y="0")
        h = lift_through_epi(mod2, g)
        self.assertEqual(compose(mod2.mapping, h), g, "The lift composes back to g")
        self.assertEqual(h.image("s", "x"), "1", "The least preimage is chosen")

    def test_no_preimage(self):
        constant = Homomorphism.build(ID2, ID2, {"s": {"0": "0", "1": "0"}})
        with self.assertRaises(NoPreimage) as cm:
            lift_through_epi(constant, assign(X1, ID2, x="1"))
        self.assertEqual((cm.exception.sort, cm.exception.element), ("s", "1"))


class EnumerateTest(SimpleTestCase):
    def test_by_height(self):
        terms = enumerate_terms(SIG1, X1, 3)
        self.assertEqual(
            [print_term(t) for t in terms["s"]],
            ["(x)", "(c)", "(f (x))", "(f (c))", "(f (f (x)))", "(f (f (c)))"],
        )
        self.assertEqual(enumerate_terms(SIG1, X1, 0), {"s": []})

    def test_binary(self):
        self.assertEqual(len(enumerate_terms(BIN, X1, 2)["s"]), 2)
        self.assertEqual(len(enumerate_terms(BIN, X1, 3)["s"]), 5)
        with self.assertRaises(BoundExceeded):
            enumerate_terms(BIN, X1, 4, limit=10)

    def test_empty_sorts(self):
        E1 = generators(SIG2, "z:e")
        self.assertEqual(len(enumerate_terms(SIG2, generators(SIG2), 3)["e"]), 0, "No terms of sort e without a generator")
        self.assertEqual(len(enumerate_terms(SIG2, E1, 2)["b"]), 2)

    def test_random_term(self):
        rng = random.Random(4)
        for _ in range(20):
            t = random_term(SIG1, X1, "s", 4, rng)
            self.assertLessEqual(t.depth(), 4)
        self.assertIsNone(random_term(SIG2, generators(SIG2), "e", 4, rng), "Sort e is uninhabited")
