"""Canonical text output for both formats.

print_modern emits minimal parentheses under the precedence order
~  >  &  >  |  >  ->  with a right-associative arrow; quantifier bodies run
to the end of their enclosing group, so a quantifier anywhere else gets
parentheses. Binary operators get single surrounding spaces, argument and
variable lists stay tight. Output is ASCII.

print_lbs emits the canonical single-spaced s-expression form; it accepts
the relaxed kernel (multi-letter and guarded universal blocks) and raises
KernelError on conjunction, disjunction, or existential blocks.
"""

from .ast import (
    And,
    Application,
    Atom,
    AtomF,
    Compare,
    Cond,
    Constant,
    Formula,
    Judgment,
    Not,
    Or,
    Pred,
    Prop,
    Quant,
    QuantKind,
    Term,
    Variable,
)
from .kernel import KernelError, kernel_violation

_LEVEL_COND = 1
_LEVEL_OR = 2
_LEVEL_AND = 3
_LEVEL_UNARY = 4


def term_text(t: Term) -> str:
    if isinstance(t, (Variable, Constant)):
        return t.name
    if isinstance(t, Application):
        return f"{t.function}({','.join(term_text(a) for a in t.args)})"
    raise TypeError(f"not a term: {t!r}")


def atom_text(a: Atom) -> str:
    if isinstance(a, Prop):
        return a.name
    if isinstance(a, Pred):
        return f"{a.name}({','.join(term_text(t) for t in a.args)})"
    if isinstance(a, Compare):
        return f"{term_text(a.left)} {a.op.value} {term_text(a.right)}"
    raise TypeError(f"not an atom: {a!r}")


def _fmt(f: Formula, min_level: int) -> str:
    if isinstance(f, AtomF):
        return atom_text(f.atom)
    if isinstance(f, Not):
        return "~" + _fmt(f.body, _LEVEL_UNARY)
    if isinstance(f, Quant):
        block = f.block
        head = "forall" if block.kind is QuantKind.FORALL else "exists"
        guard = "" if block.guard is None else f" [{_fmt(block.guard, 0)}]"
        text = f"{head} {','.join(block.vars)}{guard} . {_fmt(f.body, 0)}"
        # a quantifier may stand bare at top level and to the right of ->
        return f"({text})" if min_level > _LEVEL_COND else text
    if isinstance(f, And):
        text = f"{_fmt(f.left, _LEVEL_AND)} & {_fmt(f.right, _LEVEL_AND + 1)}"
        level = _LEVEL_AND
    elif isinstance(f, Or):
        text = f"{_fmt(f.left, _LEVEL_OR)} | {_fmt(f.right, _LEVEL_OR + 1)}"
        level = _LEVEL_OR
    elif isinstance(f, Cond):
        text = f"{_fmt(f.condition, _LEVEL_COND + 1)} -> {_fmt(f.consequent, _LEVEL_COND)}"
        level = _LEVEL_COND
    else:
        raise TypeError(f"not a formula: {f!r}")
    return f"({text})" if level < min_level else text


def print_modern(j: Judgment) -> str:
    prefix = "|- " if j.asserted else ""
    return prefix + _fmt(j.body, 0)


def _lbs(f: Formula) -> str:
    if isinstance(f, AtomF):
        return atom_text(f.atom)
    if isinstance(f, Not):
        return f"(not {_lbs(f.body)})"
    if isinstance(f, Cond):
        return f"(cond {_lbs(f.condition)} {_lbs(f.consequent)})"
    if isinstance(f, Quant):
        block = f.block
        guard = "" if block.guard is None else f" {_lbs(block.guard)}"
        return f"(all {' '.join(block.vars)} :{guard} => {_lbs(f.body)})"
    raise TypeError(f"not a formula: {f!r}")


def print_lbs(j: Judgment) -> str:
    violation = kernel_violation(j.body, allow_multi=True, allow_guard=True)
    if violation is not None:
        raise KernelError(f"cannot serialize {violation}; desugar first")
    head = "judge" if j.asserted else "content"
    return f"({head} {_lbs(j.body)})"
