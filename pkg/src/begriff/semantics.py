"""Truth tables and finite-model evaluation.

Truth values are the booleans, printed as "w" (true) and "f" (false) unless
the caller asks for "T"/"F". Truth tables list variables sorted by name,
enumerate w before f with the first variable most significant, and that
ordering reproduces the classic published row order A,B = ww, wf, fw, ff.

Finite interpretations carry explicit tables for every symbol; comparison
operators are looked up as binary relations, never computed, so "<" means
whatever the interpretation says it means.
"""

from dataclasses import dataclass
from itertools import product

from .ast import (
    And,
    Application,
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
    Variable,
    free_variables,
)
from .printer import print_modern

MAX_INTERPRETATIONS = 2**24


class SemanticsError(Exception):
    pass


class QuantifiedInputError(SemanticsError):
    """Raised when a truth-table request needs more than proposition letters."""


class UnboundVariableError(SemanticsError):
    pass


class MissingSymbolError(SemanticsError):
    pass


class SignatureTooLargeError(SemanticsError):
    pass


# ---------------------------------------------------------------------------
# Propositional truth tables


@dataclass(frozen=True)
class TruthTable:
    variables: tuple
    rows: tuple  # of (assignment dict, output bool)


def _prop_letters(f: Formula, out: set) -> None:
    if isinstance(f, AtomF):
        if not isinstance(f.atom, Prop):
            raise QuantifiedInputError(
                "truth tables need propositional formulas; found a non-letter atom"
            )
        out.add(f.atom.name)
    elif isinstance(f, Not):
        _prop_letters(f.body, out)
    elif isinstance(f, Cond):
        _prop_letters(f.condition, out)
        _prop_letters(f.consequent, out)
    elif isinstance(f, (And, Or)):
        _prop_letters(f.left, out)
        _prop_letters(f.right, out)
    elif isinstance(f, Quant):
        raise QuantifiedInputError("truth tables need quantifier-free formulas")
    else:
        raise TypeError(f"not a formula: {f!r}")


def _eval_prop(f: Formula, assignment: dict) -> bool:
    if isinstance(f, AtomF):
        return assignment[f.atom.name]
    if isinstance(f, Not):
        return not _eval_prop(f.body, assignment)
    if isinstance(f, Cond):
        return (not _eval_prop(f.condition, assignment)) or _eval_prop(f.consequent, assignment)
    if isinstance(f, And):
        return _eval_prop(f.left, assignment) and _eval_prop(f.right, assignment)
    if isinstance(f, Or):
        return _eval_prop(f.left, assignment) or _eval_prop(f.right, assignment)
    raise TypeError(f"not a formula: {f!r}")


def _assignments(variables: tuple):
    for values in product((True, False), repeat=len(variables)):
        yield dict(zip(variables, values))


def truth_table(f: Formula) -> TruthTable:
    letters: set = set()
    _prop_letters(f, letters)
    variables = tuple(sorted(letters))
    rows = tuple((a, _eval_prop(f, a)) for a in _assignments(variables))
    return TruthTable(variables, rows)


def propositional_counterexample(f1: Formula, f2: Formula) -> dict | None:
    """First assignment (in table order) where f1 and f2 disagree, or None."""
    letters: set = set()
    _prop_letters(f1, letters)
    _prop_letters(f2, letters)
    variables = tuple(sorted(letters))
    for a in _assignments(variables):
        if _eval_prop(f1, a) != _eval_prop(f2, a):
            return a
    return None


def equivalent_propositional(f1: Formula, f2: Formula) -> bool:
    return propositional_counterexample(f1, f2) is None


def is_propositional(f: Formula) -> bool:
    try:
        _prop_letters(f, set())
    except QuantifiedInputError:
        return False
    return True


def value_label(value: bool, style: str = "wf") -> str:
    if style == "tf":
        return "T" if value else "F"
    return "w" if value else "f"


def format_truth_table(table: TruthTable, formula: Formula, style: str = "wf") -> str:
    """Aligned grid: variable columns, then one column for the formula."""
    headers = list(table.variables) + [print_modern(Judgment(False, formula))]
    widths = [len(h) for h in headers]
    lines = [" | ".join(headers)]
    for assignment, output in table.rows:
        cells = [value_label(assignment[v], style) for v in table.variables]
        cells.append(value_label(output, style))
        lines.append(" | ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip())
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Finite models


@dataclass(frozen=True)
class Interpretation:
    """A finite model over domain {0, ..., domain_size - 1}.

    predicate_tables maps (name, arity) to a set of argument tuples;
    proposition letters appear with arity 0 and comparison operators appear
    under their spelling with arity 2. function_tables maps (name, arity) to
    a total map from argument tuples to elements."""

    domain_size: int
    predicate_tables: dict
    constant_values: dict
    function_tables: dict


def _eval_term(t, interp: Interpretation, env: dict) -> int:
    if isinstance(t, Variable):
        if t.name not in env:
            raise UnboundVariableError(f"unbound variable {t.name!r}")
        return env[t.name]
    if isinstance(t, Constant):
        if t.name not in interp.constant_values:
            raise MissingSymbolError(f"no value for constant {t.name!r}")
        return interp.constant_values[t.name]
    if isinstance(t, Application):
        key = (t.function, len(t.args))
        if key not in interp.function_tables:
            raise MissingSymbolError(f"no table for function {t.function!r}/{len(t.args)}")
        args = tuple(_eval_term(a, interp, env) for a in t.args)
        return interp.function_tables[key][args]
    raise TypeError(f"not a term: {t!r}")


def _lookup_relation(interp: Interpretation, name: str, arity: int):
    key = (name, arity)
    if key not in interp.predicate_tables:
        raise MissingSymbolError(f"no table for predicate {name!r}/{arity}")
    return interp.predicate_tables[key]


def evaluate(f: Formula, interp: Interpretation, env: dict | None = None) -> bool:
    """Tarskian truth in a finite model. Guarded blocks read classically:
    a guarded forall is guard -> body, a guarded exists is guard & body."""
    env = env or {}
    if isinstance(f, AtomF):
        a = f.atom
        if isinstance(a, Prop):
            return () in _lookup_relation(interp, a.name, 0)
        if isinstance(a, Pred):
            args = tuple(_eval_term(t, interp, env) for t in a.args)
            return args in _lookup_relation(interp, a.name, len(a.args))
        if isinstance(a, Compare):
            pair = (
                _eval_term(a.left, interp, env),
                _eval_term(a.right, interp, env),
            )
            return pair in _lookup_relation(interp, a.op.value, 2)
        raise TypeError(f"not an atom: {a!r}")
    if isinstance(f, Not):
        return not evaluate(f.body, interp, env)
    if isinstance(f, Cond):
        return (not evaluate(f.condition, interp, env)) or evaluate(f.consequent, interp, env)
    if isinstance(f, And):
        return evaluate(f.left, interp, env) and evaluate(f.right, interp, env)
    if isinstance(f, Or):
        return evaluate(f.left, interp, env) or evaluate(f.right, interp, env)
    if isinstance(f, Quant):
        block = f.block
        domain = range(interp.domain_size)
        for values in product(domain, repeat=len(block.vars)):
            inner = dict(env)
            inner.update(zip(block.vars, values))
            if block.kind is QuantKind.FORALL:
                if block.guard is not None and not evaluate(block.guard, interp, inner):
                    continue
                if not evaluate(f.body, interp, inner):
                    return False
            else:
                if block.guard is not None and not evaluate(block.guard, interp, inner):
                    continue
                if evaluate(f.body, interp, inner):
                    return True
        return block.kind is QuantKind.FORALL
    raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------------------
# Signature extraction and model enumeration


@dataclass(frozen=True)
class Signature:
    predicates: tuple  # sorted (name, arity); props arity 0, comparisons arity 2
    functions: tuple   # sorted (name, arity)
    constants: tuple   # sorted names


def _scan_term(t, preds: set, funcs: set, consts: set) -> None:
    if isinstance(t, Constant):
        consts.add(t.name)
    elif isinstance(t, Application):
        funcs.add((t.function, len(t.args)))
        for a in t.args:
            _scan_term(a, preds, funcs, consts)


def _scan(f: Formula, preds: set, funcs: set, consts: set) -> None:
    if isinstance(f, AtomF):
        a = f.atom
        if isinstance(a, Prop):
            preds.add((a.name, 0))
        elif isinstance(a, Pred):
            preds.add((a.name, len(a.args)))
            for t in a.args:
                _scan_term(t, preds, funcs, consts)
        else:
            preds.add((a.op.value, 2))
            _scan_term(a.left, preds, funcs, consts)
            _scan_term(a.right, preds, funcs, consts)
    elif isinstance(f, Not):
        _scan(f.body, preds, funcs, consts)
    elif isinstance(f, Cond):
        _scan(f.condition, preds, funcs, consts)
        _scan(f.consequent, preds, funcs, consts)
    elif isinstance(f, (And, Or)):
        _scan(f.left, preds, funcs, consts)
        _scan(f.right, preds, funcs, consts)
    elif isinstance(f, Quant):
        if f.block.guard is not None:
            _scan(f.block.guard, preds, funcs, consts)
        _scan(f.body, preds, funcs, consts)
    else:
        raise TypeError(f"not a formula: {f!r}")


def signature_of(*formulas: Formula) -> Signature:
    preds: set = set()
    funcs: set = set()
    consts: set = set()
    for f in formulas:
        _scan(f, preds, funcs, consts)
    return Signature(tuple(sorted(preds)), tuple(sorted(funcs)), tuple(sorted(consts)))


def interpretation_count(sig: Signature, domain_size: int, n_env_vars: int = 0) -> int:
    total = 1
    for _, arity in sig.predicates:
        total *= 2 ** (domain_size**arity)
    for _, arity in sig.functions:
        total *= domain_size ** (domain_size**arity)
    total *= domain_size ** len(sig.constants)
    total *= domain_size**n_env_vars
    return total


def enumerate_interpretations(sig: Signature, domain_size: int):
    """All interpretations of sig, deterministically: symbols in sorted
    order, predicate tables counted in binary over the lexicographically
    ordered tuple space, function tables and constants likewise."""
    pred_spaces = [
        list(product(range(domain_size), repeat=arity)) for _, arity in sig.predicates
    ]
    func_spaces = [
        list(product(range(domain_size), repeat=arity)) for _, arity in sig.functions
    ]

    def pred_options(tuples):
        for bits in range(2 ** len(tuples)):
            yield frozenset(t for i, t in enumerate(tuples) if bits >> i & 1)

    def func_options(tuples):
        for values in product(range(domain_size), repeat=len(tuples)):
            yield dict(zip(tuples, values))

    pred_iters = [list(pred_options(space)) for space in pred_spaces]
    func_iters = [list(func_options(space)) for space in func_spaces]
    const_iter = list(product(range(domain_size), repeat=len(sig.constants)))

    for pred_choice in product(*pred_iters):
        predicate_tables = dict(zip(sig.predicates, pred_choice))
        for func_choice in product(*func_iters):
            function_tables = dict(zip(sig.functions, func_choice))
            for const_choice in const_iter:
                constant_values = dict(zip(sig.constants, const_choice))
                yield Interpretation(
                    domain_size, predicate_tables, constant_values, function_tables
                )


def bounded_counterexample(f1: Formula, f2: Formula, max_domain: int = 3):
    """Search domains 1..max_domain for an interpretation and environment
    where f1 and f2 disagree. Returns (interpretation, env) or None."""
    sig = signature_of(f1, f2)
    env_vars = tuple(sorted(free_variables(f1) | free_variables(f2)))
    if interpretation_count(sig, max_domain, len(env_vars)) > MAX_INTERPRETATIONS:
        raise SignatureTooLargeError(
            f"interpretation space at domain {max_domain} exceeds {MAX_INTERPRETATIONS}"
        )
    for domain_size in range(1, max_domain + 1):
        for interp in enumerate_interpretations(sig, domain_size):
            for values in product(range(domain_size), repeat=len(env_vars)):
                env = dict(zip(env_vars, values))
                if evaluate(f1, interp, env) != evaluate(f2, interp, env):
                    return interp, env
    return None


def equivalent_bounded(f1: Formula, f2: Formula, max_domain: int = 3) -> bool:
    return bounded_counterexample(f1, f2, max_domain) is None


# ---------------------------------------------------------------------------
# Counterexample formatting


def format_assignment(assignment: dict, style: str = "wf") -> str:
    return " ".join(f"{n}={value_label(assignment[n], style)}" for n in sorted(assignment))


def _format_tuple(t: tuple) -> str:
    if len(t) == 1:
        return str(t[0])
    return "(" + ",".join(str(v) for v in t) + ")"


def format_interpretation(interp: Interpretation, env: dict | None = None) -> str:
    parts = [f"domain={interp.domain_size}"]
    for (name, arity), table in sorted(interp.predicate_tables.items()):
        if arity == 0:
            parts.append(f"{name}={value_label(() in table)}")
        else:
            inner = ",".join(_format_tuple(t) for t in sorted(table))
            parts.append(f"{name}={{{inner}}}")
    for (name, _), table in sorted(interp.function_tables.items()):
        inner = ",".join(f"{_format_tuple(k)}->{v}" for k, v in sorted(table.items()))
        parts.append(f"{name}={{{inner}}}")
    for name, value in sorted(interp.constant_values.items()):
        parts.append(f"{name}={value}")
    for name, value in sorted((env or {}).items()):
        parts.append(f"{name}={value}")
    return " ".join(parts)
