"""Shared algebras for the tests of all apps"""

from __future__ import annotations

import os

from finite_algebra.algebra import FiniteAlgebra, final_algebra
from signature_terms.signature import Signature
from signature_terms.terms import GeneratorSet
from sorted_core.sets import SortedMap, SortedSubset
from syntactic.recognizers import Recognizer

FIXTURE_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "fixtures")
DESK = os.path.join(FIXTURE_DIR, "desk.alg")

# one sort, a constant and a unary operation
SIG1 = Signature.build(["s"], [("c", [], "s"), ("f", ["s"], "s")], name="SIG1")

# two sorts; tt is a constant of sort b
SIG2 = Signature.build(
    ["e", "b"],
    [("tt", [], "b"), ("p", ["e"], "b"), ("g", ["e"], "e")],
    name="SIG2",
)

# like SIG2 but without any constant
SIG2_OPEN = Signature.build(
    ["e", "b"], [("p", ["e"], "b"), ("g", ["e"], "e")], name="SIG2_OPEN"
)

# one sort and a binary operation
BIN = Signature.build(["s"], [("m", ["s", "s"], "s")], name="BIN")


def cyclic(n: int, name: str) -> FiniteAlgebra:
    """c = 0 and f = +1 mod n"""
    return FiniteAlgebra.from_functions(
        SIG1,
        {"s": [str(i) for i in range(n)]},
        {"c": lambda: "0", "f": lambda x: str((int(x) + 1) % n)},
        name=name,
    )


def identity(n: int, name: str) -> FiniteAlgebra:
    """c = 0 and f = identity"""
    return FiniteAlgebra.from_functions(
        SIG1,
        {"s": [str(i) for i in range(n)]},
        {"c": lambda: "0", "f": lambda x: x},
        name=name,
    )


CYC2 = cyclic(2, "CYC2")
CYC4 = cyclic(4, "CYC4")
ID2 = identity(2, "ID2")
ID3 = identity(3, "ID3")
ID4 = identity(4, "ID4")

# f collapses everything onto the constant
CONST2 = FiniteAlgebra.from_functions(
    SIG1, {"s": ["0", "1"]}, {"c": lambda: "0", "f": lambda x: "0"}, name="CONST2"
)

ONE = final_algebra(SIG1).renamed("ONE")

# the empty carrier at e is legal since no constant lands there
EMPTY_E = FiniteAlgebra.from_functions(
    SIG2,
    {"e": [], "b": ["0", "1"]},
    {"tt": lambda: "1", "p": lambda x: x, "g": lambda x: x},
    name="EMPTY_E",
)

# two elements in each sort; g swaps, p is the obvious bijection
SWAP = FiniteAlgebra.from_functions(
    SIG2,
    {"e": ["a0", "a1"], "b": ["0", "1"]},
    {
        "tt": lambda: "1",
        "p": lambda x: {"a0": "0", "a1": "1"}[x],
        "g": lambda x: {"a0": "a1", "a1": "a0"}[x],
    },
    name="SWAP",
)

# p forgets its argument, g is constant
FLAT = FiniteAlgebra.from_functions(
    SIG2,
    {"e": ["a0", "a1", "a2"], "b": ["0", "1"]},
    {"tt": lambda: "0", "p": lambda x: "1", "g": lambda x: "a0"},
    name="FLAT",
)

OPEN = FiniteAlgebra.from_functions(
    SIG2_OPEN,
    {"e": ["a0", "a1"], "b": ["0"]},
    {"p": lambda x: "0", "g": lambda x: x},
    name="OPEN",
)

XOR = FiniteAlgebra.from_functions(
    BIN,
    {"s": ["0", "1"]},
    {"m": lambda x, y: str(int(x) ^ int(y))},
    name="XOR",
)

AND3 = FiniteAlgebra.from_functions(
    BIN,
    {"s": ["0", "1", "2"]},
    {"m": lambda x, y: str(min(int(x), int(y)))},
    name="AND3",
)

# the fixtures with total carrier at most 5, for exhaustive checks
SMALL = [ONE, CYC2, CYC4, ID2, ID3, ID4, CONST2, EMPTY_E, SWAP, FLAT, OPEN, XOR, AND3]


def generators(signature: Signature, *variables: str, name: str = None) -> GeneratorSet:
    """Builds a generator set from "x:s" strings"""

    pairs = [tuple(v.split(":")) for v in variables]
    return GeneratorSet(signature, pairs, name=name)


X1 = generators(SIG1, "x:s", name="X1")
X2 = generators(SIG1, "x:s", "y:s", name="X2")
X0 = generators(SIG1, name="X0")


def recognizer(gens, algebra, assign, accept, name=None):
    """assign and accept map sorts to images and to accepted elements"""

    return Recognizer(
        gens,
        algebra,
        SortedMap(gens, algebra.carriers, assign),
        SortedSubset(algebra.carriers, accept),
        name,
    )


# languages counting the f in a term, mod 2 and mod 4
EVEN = recognizer(X1, CYC2, {"s": {"x": "0"}}, {"s": ["0"]}, "evenF")
MOD4 = recognizer(X1, CYC4, {"s": {"x": "0"}}, {"s": ["0", "2"]}, "mod4")
ZERO4 = recognizer(X1, CYC4, {"s": {"x": "0"}}, {"s": ["0"]}, "zero4")
