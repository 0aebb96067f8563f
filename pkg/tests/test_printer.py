import pytest
from hypothesis import given, settings

from begriff.ast import (
    And,
    AtomF,
    Cond,
    Judgment,
    Not,
    Or,
    Prop,
    Quant,
    QuantBlock,
    QuantKind,
    Variable,
)
from begriff.kernel import KernelError
from begriff.parser import parse_lbs, parse_modern
from begriff.printer import print_lbs, print_modern

from helpers import formula_st, kernel_formula_st

A = AtomF(Prop("A"))
B = AtomF(Prop("B"))
C = AtomF(Prop("C"))


def text(f):
    return print_modern(Judgment(False, f))


def test_kernel_shapes_print_compactly():
    assert text(Cond(Not(B), A)) == "~B -> A"
    assert text(Not(Cond(B, Not(A)))) == "~(B -> ~A)"
    assert text(And(B, Not(A))) == "B & ~A"


def test_minimal_parentheses():
    assert text(And(And(A, B), C)) == "A & B & C"
    assert text(And(A, And(B, C))) == "A & (B & C)"
    assert text(Or(And(A, B), C)) == "A & B | C"
    assert text(And(Or(A, B), C)) == "(A | B) & C"
    assert text(Cond(A, Cond(B, C))) == "A -> B -> C"
    assert text(Cond(Cond(A, B), C)) == "(A -> B) -> C"
    assert text(Not(Or(A, B))) == "~(A | B)"


def test_quantifier_printing():
    q = Quant(QuantBlock(QuantKind.FORALL, ("x",)), A)
    assert text(q) == "forall x . A"
    assert text(Cond(A, q)) == "A -> forall x . A"
    assert text(Cond(q, A)) == "(forall x . A) -> A"
    assert text(And(q, B)) == "(forall x . A) & B"
    assert text(Not(q)) == "~(forall x . A)"
    guarded = Quant(QuantBlock(QuantKind.EXISTS, ("m", "k"), B), A)
    assert text(guarded) == "exists m,k [B] . A"


def test_judgment_prefix():
    assert print_modern(Judgment(True, A)) == "|- A"
    assert print_modern(Judgment(False, A)) == "A"


def test_lbs_canonical_text():
    assert print_lbs(Judgment(False, Cond(Not(B), A))) == "(content (cond (not B) A))"
    assert print_lbs(Judgment(True, A)) == "(judge A)"
    q = Not(Quant(QuantBlock(QuantKind.FORALL, ("x",)), Not(A)))
    assert print_lbs(Judgment(False, q)) == "(content (not (all x : => (not A))))"
    guarded = Quant(QuantBlock(QuantKind.FORALL, ("m", "k"), B), A)
    assert print_lbs(Judgment(False, guarded)) == "(content (all m k : B => A))"


def test_lbs_rejects_surface_connectives():
    with pytest.raises(KernelError) as info:
        print_lbs(Judgment(False, Or(A, B)))
    assert "desugar" in str(info.value)
    with pytest.raises(KernelError):
        print_lbs(Judgment(False, And(A, B)))
    with pytest.raises(KernelError):
        print_lbs(Judgment(False, Quant(QuantBlock(QuantKind.EXISTS, ("x",)), A)))


@settings(max_examples=200)
@given(formula_st)
def test_modern_roundtrip(f):
    j = Judgment(False, f)
    assert parse_modern(print_modern(j)) == j


@settings(max_examples=200)
@given(kernel_formula_st)
def test_lbs_roundtrip(f):
    j = Judgment(True, f)
    canonical = print_lbs(j)
    assert parse_lbs(canonical) == j
    assert print_lbs(parse_lbs(canonical)) == canonical


@settings(max_examples=100)
@given(formula_st)
def test_printer_is_deterministic(f):
    j = Judgment(False, f)
    assert print_modern(j) == print_modern(j)
