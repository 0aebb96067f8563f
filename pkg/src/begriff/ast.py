"""Immutable AST shared by every other module.

Terms, atoms, formulas and judgments are frozen dataclasses, so dataclass
equality is exactly node-for-node structural equality (no alpha-renaming:
bound variable names are significant).
"""

from dataclasses import dataclass
from enum import Enum
import re

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
_NUMBER_RE = re.compile(r"[0-9]+\Z")


class Term:
    """Base class for variables, constants and function applications."""


@dataclass(frozen=True)
class Variable(Term):
    name: str

    def __post_init__(self):
        if not _NAME_RE.match(self.name):
            raise ValueError(f"invalid variable name: {self.name!r}")


@dataclass(frozen=True)
class Constant(Term):
    """A named constant ("Nat", "X", ...) or a decimal literal ("0", "42")."""

    name: str

    def __post_init__(self):
        if not (_NAME_RE.match(self.name) or _NUMBER_RE.match(self.name)):
            raise ValueError(f"invalid constant: {self.name!r}")


@dataclass(frozen=True)
class Application(Term):
    function: str
    args: tuple

    def __post_init__(self):
        if not _NAME_RE.match(self.function):
            raise ValueError(f"invalid function name: {self.function!r}")
        object.__setattr__(self, "args", tuple(self.args))
        if len(self.args) < 1:
            raise ValueError("applications take at least one argument")


class ComparisonOp(Enum):
    LT = "<"
    LE = "<="
    GT = ">"
    GE = ">="
    EQ = "="
    NE = "!="
    IN = "in"
    NOTIN = "notin"


class Atom:
    """Base class for atomic statements."""


@dataclass(frozen=True)
class Prop(Atom):
    """A propositional letter with no internal structure."""

    name: str

    def __post_init__(self):
        if not _NAME_RE.match(self.name):
            raise ValueError(f"invalid proposition name: {self.name!r}")


@dataclass(frozen=True)
class Pred(Atom):
    name: str
    args: tuple

    def __post_init__(self):
        if not _NAME_RE.match(self.name):
            raise ValueError(f"invalid predicate name: {self.name!r}")
        object.__setattr__(self, "args", tuple(self.args))
        if len(self.args) < 1:
            raise ValueError("predicates take at least one argument")


@dataclass(frozen=True)
class Compare(Atom):
    left: Term
    op: ComparisonOp
    right: Term


class Formula:
    """Base class for formulas."""


@dataclass(frozen=True)
class AtomF(Formula):
    atom: Atom


@dataclass(frozen=True)
class Not(Formula):
    body: Formula


@dataclass(frozen=True)
class Cond(Formula):
    """The conditional: Cond(b, a) states that b implies a.

    The consequent rides on the main stroke of a diagram and the condition
    hangs below it, which is why the condition is the first field.
    """

    condition: Formula
    consequent: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


class QuantKind(Enum):
    FORALL = "forall"
    EXISTS = "exists"


@dataclass(frozen=True)
class QuantBlock:
    """One quantifier block: a kind, bound variables, and an optional guard.

    Comma lists like "exists m,k [m >= n]" stay one block; a guard with
    several constraints is stored as a single And formula.
    """

    kind: QuantKind
    vars: tuple
    guard: Formula | None = None

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(self.vars))
        if not self.vars:
            raise ValueError("quantifier block binds no variables")
        for v in self.vars:
            if not _NAME_RE.match(v):
                raise ValueError(f"invalid bound variable: {v!r}")
        if len(set(self.vars)) != len(self.vars):
            raise ValueError(f"duplicate bound variable in block: {self.vars}")


@dataclass(frozen=True)
class Quant(Formula):
    block: QuantBlock
    body: Formula


@dataclass(frozen=True)
class Judgment:
    """A formula plus the flag saying whether it is asserted or merely framed."""

    asserted: bool
    body: Formula


def term_variables(t: Term) -> set:
    if isinstance(t, Variable):
        return {t.name}
    if isinstance(t, Constant):
        return set()
    if isinstance(t, Application):
        out = set()
        for a in t.args:
            out |= term_variables(a)
        return out
    raise TypeError(f"not a term: {t!r}")


def atom_variables(a: Atom) -> set:
    if isinstance(a, Prop):
        return set()
    if isinstance(a, Pred):
        out = set()
        for t in a.args:
            out |= term_variables(t)
        return out
    if isinstance(a, Compare):
        return term_variables(a.left) | term_variables(a.right)
    raise TypeError(f"not an atom: {a!r}")


def free_variables(f: Formula) -> set:
    """Variables occurring free in f; quantifier blocks bind their variables
    in both the guard and the body."""
    if isinstance(f, AtomF):
        return atom_variables(f.atom)
    if isinstance(f, Not):
        return free_variables(f.body)
    if isinstance(f, Cond):
        return free_variables(f.condition) | free_variables(f.consequent)
    if isinstance(f, (And, Or)):
        return free_variables(f.left) | free_variables(f.right)
    if isinstance(f, Quant):
        inner = free_variables(f.body)
        if f.block.guard is not None:
            inner |= free_variables(f.block.guard)
        return inner - set(f.block.vars)
    raise TypeError(f"not a formula: {f!r}")


def structurally_equal(f1, f2) -> bool:
    """Node-for-node equality. Frozen dataclasses compare structurally, so
    this is plain equality; the name documents intent at call sites."""
    return f1 == f2


def children(f: Formula) -> tuple:
    """Immediate subformulas, guard first for guarded blocks."""
    if isinstance(f, AtomF):
        return ()
    if isinstance(f, Not):
        return (f.body,)
    if isinstance(f, Cond):
        return (f.condition, f.consequent)
    if isinstance(f, (And, Or)):
        return (f.left, f.right)
    if isinstance(f, Quant):
        if f.block.guard is not None:
            return (f.block.guard, f.body)
        return (f.body,)
    raise TypeError(f"not a formula: {f!r}")


def with_children(f: Formula, kids: tuple) -> Formula:
    """Rebuild f with new immediate subformulas, in children() order."""
    if isinstance(f, AtomF):
        if kids:
            raise ValueError("atoms have no subformulas")
        return f
    if isinstance(f, Not):
        (body,) = kids
        return Not(body)
    if isinstance(f, Cond):
        condition, consequent = kids
        return Cond(condition, consequent)
    if isinstance(f, And):
        left, right = kids
        return And(left, right)
    if isinstance(f, Or):
        left, right = kids
        return Or(left, right)
    if isinstance(f, Quant):
        if f.block.guard is not None:
            guard, body = kids
            return Quant(QuantBlock(f.block.kind, f.block.vars, guard), body)
        (body,) = kids
        return Quant(f.block, body)
    raise TypeError(f"not a formula: {f!r}")
