from django.test import SimpleTestCase

from signature_terms.errors import SignatureError, TermSyntaxError
from signature_terms.parser import parse_context, parse_term, print_term
from signature_terms.terms import COMPOSITE, CONSTANT, VARIABLE, Context, GeneratorSet, Term
from sorted_core.errors import SortMismatch

from SortedAlgebra.tests.fixtures import BIN, SIG1, SIG2, X1, X2, generators

E1 = generators(SIG2, "z:e", name="E1")


class TermTest(SimpleTestCase):
    def test_kinds(self):
        self.assertEqual(Term.var("x", "s").kind, VARIABLE)
        self.assertEqual(Term.apply(SIG1, "c").kind, CONSTANT)
        self.assertEqual(Term.apply(SIG1, "f", [Term.apply(SIG1, "c")]).kind, COMPOSITE)

    def test_apply_checks_sorts(self):
        z = Term.var("z", "e")
        self.assertEqual(Term.apply(SIG2, "p", [z]).sort, "b")
        with self.assertRaises(SortMismatch):
            Term.apply(SIG2, "g", [Term.apply(SIG2, "tt")])
        with self.assertRaises(SignatureError):
            Term.apply(SIG2, "p", [])

    def test_structure(self):
        t = parse_term("(m (x) (m (x) (x)))", BIN, X1)
        self.assertEqual(t.size, 5)
        self.assertEqual(t.depth(), 3)
        self.assertEqual(t.variables(), [("x", "s")] * 3)
        self.assertEqual(t.children[1], parse_term("(m (x) (x))", BIN, X1))


class ParserTest(SimpleTestCase):
    def test_unique_readability(self):
        for text in ["(c)", "(x)", "(f (f (x)))", "(f   (c) )"]:
            t = parse_term(text, SIG1, X1)
            self.assertEqual(
                parse_term(print_term(t), SIG1, X1), t, "Printing and reading give back the same term"
            )
        self.assertEqual(print_term(parse_term("(f   (c) )", SIG1, X1)), "(f (c))")

    def test_variables_shadow_nothing(self):
        self.assertTrue(parse_term("(x)", SIG1, X1).is_variable)
        with self.assertRaises(TermSyntaxError):
            parse_term("(y)", SIG1, X1)

    def test_errors(self):
        with self.assertRaises(TermSyntaxError):
            parse_term("(f (c) (c))", SIG1, X1)
        with self.assertRaises(TermSyntaxError):
            parse_term("(p (tt))", SIG2, E1)
        with self.assertRaises(TermSyntaxError) as cm:
            parse_term("(f c)", SIG1, X1)
        self.assertEqual(cm.exception.position, (1, 4))
        with self.assertRaises(TermSyntaxError):
            parse_term("()", SIG1, X1)


class ContextTest(SimpleTestCase):
    def test_plug(self):
        C = parse_context("(f (_))", SIG1, X1)
        self.assertEqual(C.hole_sort, "s", "The sort of the hole is inferred")
        self.assertEqual(C.plug(parse_term("(c)", SIG1, X1)), parse_term("(f (c))", SIG1, X1))
        self.assertEqual(Context.trivial("s").plug(Term.var("x", "s")), Term.var("x", "s"))

    def test_two_sorted(self):
        C = parse_context("(p (g (_)))", SIG2, E1)
        self.assertEqual((C.hole_sort, C.sort), ("e", "b"))
        with self.assertRaises(SortMismatch):
            C.plug(Term.apply(SIG2, "tt"))

    def test_hole_occurs_once(self):
        with self.assertRaises(SortMismatch):
            Context(parse_term("(m (_) (_))", BIN, X1, extra={"_": "s"}), "_", "s")
        with self.assertRaises(SortMismatch):
            Context(parse_term("(m (x) (x))", BIN, X1), "_", "s")


class GeneratorSetTest(SimpleTestCase):
    def test_declarations(self):
        self.assertEqual(X2.variables, [("x", "s"), ("y", "s")])
        self.assertEqual(X2.carrier("s"), ("x", "y"))
        self.assertEqual(E1.carrier("b"), (), "Undeclared sorts get an empty carrier")
        with self.assertRaises(SortMismatch):
            GeneratorSet(SIG1, [("x", "s"), ("x", "s")])
        with self.assertRaises(SortMismatch):
            GeneratorSet(SIG1, [("x", "t")])
