"""Rewrites between the full connective set and the stroke-notation kernel.

The kernel has exactly three formula builders over atoms: negation, the
conditional, and the universal quantifier. Everything else is sugar:

    a | b          ->  ~b -> a
    a & b          ->  ~(b -> ~a)
    exists x . p   ->  ~forall x . ~p
    guarded blocks ->  a conditional inside the block

For a guarded exists block the two encoding modes differ: FAITHFUL puts a
bare conditional under the negations, ~forall x . ~(g -> p), which is the
traditional stroke-notation reading but is not classically equivalent to
"some x satisfying g has p"; CLASSICAL encodes the conjunction g & p first.
"""

from enum import Enum

from .ast import (
    And,
    AtomF,
    Compare,
    ComparisonOp,
    Cond,
    Formula,
    Not,
    Or,
    Pred,
    Prop,
    Quant,
    QuantBlock,
    QuantKind,
    children,
    with_children,
)


class EncodingMode(Enum):
    FAITHFUL = "faithful"
    CLASSICAL = "classical"


class KernelError(Exception):
    pass


def is_kernel(f: Formula) -> bool:
    """True iff f uses only atoms, Not, Cond, and single-variable guardless
    universal blocks."""
    return kernel_violation(f, allow_multi=False, allow_guard=False) is None


def kernel_violation(f: Formula, *, allow_multi: bool, allow_guard: bool) -> str | None:
    """Description of the first non-kernel construct, or None.

    Serialization and rendering accept a relaxed kernel (multi-letter blocks,
    and for serialization guarded blocks), so the relaxations are flags.
    """
    if isinstance(f, AtomF):
        return None
    if isinstance(f, Not):
        return kernel_violation(f.body, allow_multi=allow_multi, allow_guard=allow_guard)
    if isinstance(f, Cond):
        return kernel_violation(
            f.condition, allow_multi=allow_multi, allow_guard=allow_guard
        ) or kernel_violation(f.consequent, allow_multi=allow_multi, allow_guard=allow_guard)
    if isinstance(f, And):
        return "conjunction"
    if isinstance(f, Or):
        return "disjunction"
    if isinstance(f, Quant):
        if f.block.kind is QuantKind.EXISTS:
            return "existential block"
        if f.block.guard is not None and not allow_guard:
            return "guarded block"
        if len(f.block.vars) > 1 and not allow_multi:
            return "multi-variable block"
        if f.block.guard is not None:
            inner = kernel_violation(
                f.block.guard, allow_multi=allow_multi, allow_guard=allow_guard
            )
            if inner:
                return inner
        return kernel_violation(f.body, allow_multi=allow_multi, allow_guard=allow_guard)
    raise TypeError(f"not a formula: {f!r}")


def _nest_forall(names: tuple, body: Formula, expand_blocks: bool) -> Formula:
    if expand_blocks:
        for name in reversed(names):
            body = Quant(QuantBlock(QuantKind.FORALL, (name,)), body)
        return body
    return Quant(QuantBlock(QuantKind.FORALL, names), body)


def desugar(
    f: Formula,
    mode: EncodingMode = EncodingMode.CLASSICAL,
    *,
    expand_blocks: bool = True,
) -> Formula:
    """Rewrite f into the kernel, bottom-up.

    With expand_blocks=False, multi-variable blocks are kept together as one
    concavity; the result then satisfies the relaxed kernel check only. That
    is how classic diagrams group their letters, so the renderer uses it.
    """
    if isinstance(f, AtomF):
        return f
    if isinstance(f, Not):
        return Not(desugar(f.body, mode, expand_blocks=expand_blocks))
    if isinstance(f, Cond):
        return Cond(
            desugar(f.condition, mode, expand_blocks=expand_blocks),
            desugar(f.consequent, mode, expand_blocks=expand_blocks),
        )
    if isinstance(f, And):
        left = desugar(f.left, mode, expand_blocks=expand_blocks)
        right = desugar(f.right, mode, expand_blocks=expand_blocks)
        return Not(Cond(right, Not(left)))
    if isinstance(f, Or):
        left = desugar(f.left, mode, expand_blocks=expand_blocks)
        right = desugar(f.right, mode, expand_blocks=expand_blocks)
        return Cond(Not(right), left)
    if isinstance(f, Quant):
        block = f.block
        body = desugar(f.body, mode, expand_blocks=expand_blocks)
        if block.kind is QuantKind.FORALL:
            if block.guard is not None:
                guard = desugar(block.guard, mode, expand_blocks=expand_blocks)
                body = Cond(guard, body)
            return _nest_forall(block.vars, body, expand_blocks)
        if block.guard is not None:
            guard = desugar(block.guard, mode, expand_blocks=expand_blocks)
            if mode is EncodingMode.FAITHFUL:
                inner = Cond(guard, body)
            else:
                inner = Not(Cond(body, Not(guard)))
        else:
            inner = body
        return Not(_nest_forall(block.vars, Not(inner), expand_blocks))
    raise TypeError(f"not a formula: {f!r}")


def _rewrite_root(f: Formula) -> Formula | None:
    """One resugaring step at the root, or None. Pattern priority: exists,
    then conjunction, then disjunction, then double negation."""
    if isinstance(f, Not):
        b = f.body
        if isinstance(b, Quant) and b.block.kind is QuantKind.FORALL and b.block.guard is None:
            if isinstance(b.body, Not):
                return Quant(QuantBlock(QuantKind.EXISTS, b.block.vars), b.body.body)
        if isinstance(b, Cond):
            if isinstance(b.consequent, Not):
                return And(b.consequent.body, b.condition)
            return And(b.condition, Not(b.consequent))
        if isinstance(b, Not):
            return b.body
    if isinstance(f, Cond) and isinstance(f.condition, Not):
        return Or(f.consequent, f.condition.body)
    return None


def resugar(f: Formula) -> Formula:
    """Greedy inverse of desugar: outermost-first, until no pattern is left.

    The result is semantically equivalent (it never reconstructs block
    guards; a faithfully encoded guarded exists comes back as an exists over
    a conditional)."""
    while True:
        rewritten = _rewrite_root(f)
        if rewritten is not None:
            f = rewritten
            continue
        kids = children(f)
        new_kids = tuple(resugar(k) for k in kids)
        if new_kids != kids:
            f = with_children(f, new_kids)
            continue
        return f


_FLIPPED = {
    ComparisonOp.LT: ComparisonOp.GE,
    ComparisonOp.LE: ComparisonOp.GT,
    ComparisonOp.GT: ComparisonOp.LE,
    ComparisonOp.GE: ComparisonOp.LT,
    ComparisonOp.EQ: ComparisonOp.NE,
    ComparisonOp.NE: ComparisonOp.EQ,
    ComparisonOp.IN: ComparisonOp.NOTIN,
    ComparisonOp.NOTIN: ComparisonOp.IN,
}


def negate(f: Formula) -> Formula:
    """Push a negation through f.

    Quantifier kinds flip with guards left un-negated, De Morgan handles the
    binary connectives, comparisons flip their operator, and the result keeps
    negations only directly above Prop/Pred atoms."""
    if isinstance(f, AtomF):
        if isinstance(f.atom, Compare):
            a = f.atom
            return AtomF(Compare(a.left, _FLIPPED[a.op], a.right))
        return Not(f)
    if isinstance(f, Not):
        return _positive(f.body)
    if isinstance(f, Cond):
        return And(_positive(f.condition), negate(f.consequent))
    if isinstance(f, And):
        return Or(negate(f.left), negate(f.right))
    if isinstance(f, Or):
        return And(negate(f.left), negate(f.right))
    if isinstance(f, Quant):
        block = f.block
        kind = QuantKind.EXISTS if block.kind is QuantKind.FORALL else QuantKind.FORALL
        guard = None if block.guard is None else _positive(block.guard)
        return Quant(QuantBlock(kind, block.vars, guard), negate(f.body))
    raise TypeError(f"not a formula: {f!r}")


def _positive(f: Formula) -> Formula:
    """Normalize f without negating it, so stacked negations collapse and the
    negate() postcondition holds on every subterm."""
    if isinstance(f, AtomF):
        return f
    if isinstance(f, Not):
        return negate(f.body)
    kids = children(f)
    return with_children(f, tuple(_positive(k) for k in kids))
