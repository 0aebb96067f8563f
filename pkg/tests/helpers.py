"""Shared fixtures: formula sources, seeded AST generators, diagram decoding.

The generators are deliberately restricted to parser-expressible ASTs:
named constants only appear as the right operand of in/notin, and no
identifier collides with the structural words of the linear serialization.
"""

import random

import hypothesis.strategies as st

from begriff.ast import (
    And,
    Application,
    AtomF,
    Compare,
    ComparisonOp,
    Cond,
    Constant,
    Formula,
    Not,
    Or,
    Pred,
    Prop,
    Quant,
    QuantBlock,
    QuantKind,
    Variable,
)
from begriff.layout import Diagram, GlyphKind
from begriff.parser import parse_modern

CONTINUITY_SRC = (
    "forall eps [eps > 0] . exists delta [delta > 0] . "
    "forall x [abs(sub(x,x0)) < delta] . abs(sub(f(x),f(x0))) < eps"
)

WEIGHTED_SRC = (
    "forall n [n in Nat] . exists m,k [m >= n] . "
    "forall mu,l,eps [mu >= m & eps > 0] . exists L,S [S > 0] . "
    "forall x [x in X] . v(m,l,x) <= max(mul(eps,v(n,k,x)),mul(S,v(mu,L,x)))"
)

WEIGHTED_NEGATED_SRC = (
    "exists n [n in Nat] . forall m,k [m >= n] . "
    "exists mu,l,eps [mu >= m & eps > 0] . forall L,S [S > 0] . "
    "exists x [x in X] . v(m,l,x) > max(mul(eps,v(n,k,x)),mul(S,v(mu,L,x)))"
)

# every checked-in golden diagram: (file stem, modern source)
# all are rendered from desugar(FAITHFUL, expand_blocks=False)
GOLDEN_FIGURES = (
    ("disjunction", "A | B"),
    ("conjunction", "A & B"),
    ("existential", "exists x . F(x)"),
    ("forall_exists", "|- forall x . F(x) -> exists y . R(x,y)"),
    ("continuity", CONTINUITY_SRC),
    ("weighted_estimate", WEIGHTED_SRC),
    ("weighted_estimate_negated", WEIGHTED_NEGATED_SRC),
)

PROP_LETTERS = ("A", "B", "C", "D")


def gen_prop_formula(rng: random.Random, depth: int = 8, letters=PROP_LETTERS) -> Formula:
    """Random quantifier-free formula over Prop letters."""
    if depth <= 0 or rng.random() < 0.3:
        return AtomF(Prop(rng.choice(letters)))
    shape = rng.randrange(4)
    if shape == 0:
        return Not(gen_prop_formula(rng, depth - 1, letters))
    left = gen_prop_formula(rng, depth - 1, letters)
    right = gen_prop_formula(rng, depth - 1, letters)
    return (And, Or, Cond)[shape - 1](left, right)


def gen_kernel_formula(rng: random.Random, depth: int = 8) -> Formula:
    """Random kernel-form formula (Not/Cond/single-var guardless FORALL)."""
    if depth <= 0 or rng.random() < 0.3:
        if rng.random() < 0.5:
            return AtomF(Prop(rng.choice(PROP_LETTERS)))
        name = rng.choice(("F", "G", "R"))
        args = tuple(Variable(rng.choice("xyz")) for _ in range(rng.randrange(1, 3)))
        return AtomF(Pred(name, args))
    shape = rng.randrange(4)
    if shape == 0:
        return Not(gen_kernel_formula(rng, depth - 1))
    if shape == 1:
        block = QuantBlock(QuantKind.FORALL, (rng.choice("xyz"),))
        return Quant(block, gen_kernel_formula(rng, depth - 1))
    return Cond(gen_kernel_formula(rng, depth - 1), gen_kernel_formula(rng, depth - 1))


def _gen_term(rng: random.Random, depth: int = 2):
    roll = rng.random()
    if depth <= 0 or roll < 0.5:
        return Variable(rng.choice(("x", "y", "z", "n", "m")))
    if roll < 0.7:
        return Constant(str(rng.randrange(10)))
    name = rng.choice(("f", "g", "sub", "max"))
    args = tuple(_gen_term(rng, depth - 1) for _ in range(rng.randrange(1, 3)))
    return Application(name, args)


def _gen_atom(rng: random.Random) -> AtomF:
    roll = rng.randrange(4)
    if roll == 0:
        return AtomF(Prop(rng.choice(PROP_LETTERS)))
    if roll == 1:
        args = tuple(_gen_term(rng, 1) for _ in range(rng.randrange(1, 3)))
        return AtomF(Pred(rng.choice(("F", "G", "R")), args))
    op = rng.choice(list(ComparisonOp))
    left = _gen_term(rng)
    if op in (ComparisonOp.IN, ComparisonOp.NOTIN):
        right = Constant(rng.choice(("Nat", "X", "S0")))
    else:
        right = _gen_term(rng)
    return AtomF(Compare(left, op, right))


def gen_full_formula(rng: random.Random, depth: int = 8) -> Formula:
    """Random formula over the whole surface AST, parser-expressible."""
    if depth <= 0 or rng.random() < 0.25:
        return _gen_atom(rng)
    shape = rng.randrange(6)
    if shape == 0:
        return Not(gen_full_formula(rng, depth - 1))
    if shape == 1:
        kind = rng.choice((QuantKind.FORALL, QuantKind.EXISTS))
        pool = ["x", "y", "z", "u", "w"]
        rng.shuffle(pool)
        names = tuple(pool[: rng.randrange(1, 3)])
        guard = gen_full_formula(rng, depth - 2) if rng.random() < 0.4 else None
        return Quant(QuantBlock(kind, names, guard), gen_full_formula(rng, depth - 1))
    left = gen_full_formula(rng, depth - 1)
    right = gen_full_formula(rng, depth - 1)
    return (And, And, Or, Cond)[shape - 2](left, right)


def gen_model_formula(rng: random.Random) -> Formula:
    """Closed quantified formula with a tiny signature for finite-model checks.

    At most 2 quantifier blocks and 2 predicate symbols so the interpretation
    space at domain 2 stays small.
    """

    def matrix(depth: int, scope: tuple) -> Formula:
        if depth <= 0 or rng.random() < 0.4:
            name = rng.choice(("F", "R"))
            arity = 1 if name == "F" else 2
            args = tuple(Variable(rng.choice(scope)) for _ in range(arity))
            return AtomF(Pred(name, args))
        shape = rng.randrange(4)
        if shape == 0:
            return Not(matrix(depth - 1, scope))
        left = matrix(depth - 1, scope)
        right = matrix(depth - 1, scope)
        return (And, Or, Cond)[shape - 1](left, right)

    kinds = [rng.choice((QuantKind.FORALL, QuantKind.EXISTS)) for _ in range(rng.randrange(1, 3))]
    names = ("x", "y")[: len(kinds)]
    body = matrix(2, names)
    for i in reversed(range(len(kinds))):
        guard = None
        if rng.random() < 0.3:
            guard = matrix(1, names[: i + 1])
        body = Quant(QuantBlock(kinds[i], (names[i],), guard), body)
    return body


def decode_diagram(diagram: Diagram):
    """Read a Diagram back geometrically into (asserted, kernel Formula).

    Follows row 0 left to right, descending at each branch anchor, purely
    from the draw items, without consulting the node tree.
    """
    ticks = set()
    concs = {}
    anchors = {}
    bar = False
    for item in diagram.draw_items:
        if item.kind is GlyphKind.NEG_TICK:
            ticks.add((item.row, item.col))
        elif item.kind is GlyphKind.CONCAVITY:
            concs[(item.row, item.col)] = (item.text, item.width)
        elif item.kind is GlyphKind.VERTICAL:
            anchors[(item.row, item.col)] = item.end_row
        elif item.kind is GlyphKind.JUDGE_BAR:
            bar = True
    labels = {(row, col): text for row, col, text in diagram.draw_labels}

    def walk(row: int, col: int) -> Formula:
        if (row, col) in ticks:
            return Not(walk(row, col + 2))
        if (row, col) in concs:
            letters, width = concs[(row, col)]
            body = walk(row, col + width + 1)
            for name in reversed(letters.split(",")):
                body = Quant(QuantBlock(QuantKind.FORALL, (name,)), body)
            return body
        if (row, col) in anchors:
            cond_row = anchors[(row, col)]
            return Cond(walk(cond_row, col + 2), walk(row, col + 3))
        if (row, col) in labels:
            return parse_modern(labels[(row, col)]).body
        raise AssertionError(f"nothing to read at row {row}, col {col}")

    return bar, walk(0, 3 if bar else 2)


# ---------------------------------------------------------------------------
# Hypothesis strategies. Same expressibility restriction as the seeded
# generators: named constants appear only to the right of in/notin, numeric
# constants anywhere.

_VAR_NAMES = ("x", "y", "z", "n", "m")

term_st = st.recursive(
    st.one_of(
        st.sampled_from(_VAR_NAMES).map(Variable),
        st.sampled_from(("0", "1", "2")).map(Constant),
    ),
    lambda kids: st.tuples(
        st.sampled_from(("f", "g", "sub", "max")),
        st.lists(kids, min_size=1, max_size=2),
    ).map(lambda p: Application(p[0], tuple(p[1]))),
    max_leaves=4,
)


def _mk_compare(left, op, right):
    if op in (ComparisonOp.IN, ComparisonOp.NOTIN) and isinstance(right, Variable):
        right = Constant(right.name)
    return AtomF(Compare(left, op, right))


prop_atom_st = st.sampled_from(PROP_LETTERS).map(lambda n: AtomF(Prop(n)))

atom_st = st.one_of(
    prop_atom_st,
    st.tuples(
        st.sampled_from(("F", "G", "R")), st.lists(term_st, min_size=1, max_size=2)
    ).map(lambda p: AtomF(Pred(p[0], tuple(p[1])))),
    st.builds(_mk_compare, term_st, st.sampled_from(list(ComparisonOp)), term_st),
)


def _mk_quant(kind, names, guard, body):
    return Quant(QuantBlock(kind, tuple(names), guard), body)


def _extend(kids):
    quant = st.builds(
        _mk_quant,
        st.sampled_from((QuantKind.FORALL, QuantKind.EXISTS)),
        st.lists(st.sampled_from(_VAR_NAMES), unique=True, min_size=1, max_size=2),
        st.none() | kids,
        kids,
    )
    return st.one_of(
        kids.map(Not),
        st.builds(And, kids, kids),
        st.builds(Or, kids, kids),
        st.builds(Cond, kids, kids),
        quant,
    )


formula_st = st.recursive(atom_st, _extend, max_leaves=20)

prop_formula_st = st.recursive(
    prop_atom_st,
    lambda kids: st.one_of(
        kids.map(Not),
        st.builds(And, kids, kids),
        st.builds(Or, kids, kids),
        st.builds(Cond, kids, kids),
    ),
    max_leaves=20,
)

kernel_formula_st = st.recursive(
    st.one_of(
        prop_atom_st,
        st.tuples(
            st.sampled_from(("F", "R")),
            st.lists(st.sampled_from(_VAR_NAMES).map(Variable), min_size=1, max_size=2),
        ).map(lambda p: AtomF(Pred(p[0], tuple(p[1])))),
    ),
    lambda kids: st.one_of(
        kids.map(Not),
        st.builds(Cond, kids, kids),
        st.tuples(st.sampled_from(_VAR_NAMES), kids).map(
            lambda p: Quant(QuantBlock(QuantKind.FORALL, (p[0],)), p[1])
        ),
    ),
    max_leaves=20,
)


def concavity_flanks(diagram: Diagram):
    """(left tick?, right tick?) for each concavity, in drawing order."""
    ticks = {
        (item.row, item.col)
        for item in diagram.draw_items
        if item.kind is GlyphKind.NEG_TICK
    }
    out = []
    for item in diagram.draw_items:
        if item.kind is GlyphKind.CONCAVITY:
            left = (item.row, item.col - 2) in ticks
            right = (item.row, item.col + item.width + 1) in ticks
            out.append((left, right))
    return out
