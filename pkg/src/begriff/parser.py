"""Parsers for the two text formats.

Modern notation:

    judgment := ("|-")? formula
    formula  := quant | implies
    quant    := ("forall" | "exists") varlist guard? "." formula
    varlist  := ident ("," ident)*
    guard    := "[" formula "]"
    implies  := or ("->" implies)?          right-associative
    or       := and ("|" and)*
    and      := unary ("&" unary)*
    unary    := "~" unary | "(" formula ")" | atom
    atom     := ident "(" term ("," term)* ")" | ident | term cmp term
    term     := ident "(" term ("," term)* ")" | ident | number

Unicode operator aliases are accepted on input; printers emit ASCII only.

Linear stroke serialization (LBS), a kernel-only s-expression format:

    lbs := "(judge" f ")" | "(content" f ")"
    f   := "(not" f ")"
         | "(cond" f f ")"                  condition first
         | "(all" ident+ ":" f? "=>" f ")"  optional guard before "=>"
         | atom

Spans are byte offsets into the UTF-8 encoding of the input.
"""

from dataclasses import dataclass

from .ast import (
    And,
    Application,
    AtomF,
    Compare,
    ComparisonOp,
    Cond,
    Constant,
    Formula,
    Judgment,
    Not,
    Or,
    Prop,
    Pred,
    Quant,
    QuantBlock,
    QuantKind,
    Term,
    Variable,
)


@dataclass(frozen=True)
class SourceSpan:
    start: int
    end: int


class ParseError(Exception):
    def __init__(self, span: SourceSpan, expected: list, found: str):
        self.span = span
        self.expected = list(expected)
        self.found = found
        super().__init__(f"expected {', '.join(self.expected)}, found {found}")


@dataclass(frozen=True)
class Token:
    kind: str  # "ident", "number", "eof", or the operator spelling itself
    text: str
    span: SourceSpan


# Single-character aliases, normalized to (kind, text) of their ASCII spelling.
_ALIASES = {
    "∀": ("ident", "forall"),   # forall sign
    "∃": ("ident", "exists"),   # exists sign
    "∈": ("ident", "in"),       # element of
    "∉": ("ident", "notin"),    # not element of
    "¬": ("~", "~"),
    "∧": ("&", "&"),
    "∨": ("|", "|"),
    "→": ("->", "->"),
    "≤": ("<=", "<="),
    "≥": (">=", ">="),
    "≠": ("!=", "!="),
    "⊢": ("|-", "|-"),          # turnstile
}

_TWO_CHAR = ("|-", "->", "=>", "<=", ">=", "!=")
_ONE_CHAR = "~&|()[].,:<>="


def tokenize(text: str) -> list:
    tokens = []
    i = 0
    byte_pos = 0
    n = len(text)
    while i < n:
        ch = text[i]
        blen = len(ch.encode("utf-8"))
        if ch in " \t\r\n":
            i += 1
            byte_pos += blen
            continue
        if ch in _ALIASES:
            kind, out = _ALIASES[ch]
            tokens.append(Token(kind, out, SourceSpan(byte_pos, byte_pos + blen)))
            i += 1
            byte_pos += blen
            continue
        two = text[i : i + 2]
        if two in _TWO_CHAR:
            tokens.append(Token(two, two, SourceSpan(byte_pos, byte_pos + 2)))
            i += 2
            byte_pos += 2
            continue
        if ch in _ONE_CHAR:
            tokens.append(Token(ch, ch, SourceSpan(byte_pos, byte_pos + 1)))
            i += 1
            byte_pos += 1
            continue
        if ch.isascii() and ch.isalpha():
            j = i
            while j < n and text[j].isascii() and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            tokens.append(Token("ident", word, SourceSpan(byte_pos, byte_pos + (j - i))))
            byte_pos += j - i
            i = j
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("number", text[i:j], SourceSpan(byte_pos, byte_pos + (j - i))))
            byte_pos += j - i
            i = j
            continue
        raise ParseError(
            SourceSpan(byte_pos, byte_pos + blen),
            ["identifier", "number", "operator"],
            f"{ch!r}",
        )
    end = len(text.encode("utf-8"))
    tokens.append(Token("eof", "", SourceSpan(end, end)))
    return tokens


_CMP_TOKENS = {
    "<": ComparisonOp.LT,
    "<=": ComparisonOp.LE,
    ">": ComparisonOp.GT,
    ">=": ComparisonOp.GE,
    "=": ComparisonOp.EQ,
    "!=": ComparisonOp.NE,
}


def _describe(tok: Token) -> str:
    if tok.kind == "eof":
        return "end of input"
    if tok.kind in ("ident", "number"):
        return f"'{tok.text}'"
    return f"'{tok.kind}'"


class _TokenStream:
    def __init__(self, tokens: list):
        self.tokens = tokens
        self.pos = 0

    def peek(self, ahead: int = 0) -> Token:
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "eof":
            self.pos += 1
        return tok

    def accept(self, kind: str) -> Token | None:
        if self.peek().kind == kind:
            return self.advance()
        return None

    def expect(self, kind: str, what: str | None = None) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(tok.span, [what or f"'{kind}'"], _describe(tok))
        return self.advance()

    def fail(self, expected: list) -> ParseError:
        tok = self.peek()
        return ParseError(tok.span, expected, _describe(tok))


def _cmp_op(ts: _TokenStream) -> ComparisonOp | None:
    tok = ts.peek()
    if tok.kind in _CMP_TOKENS:
        ts.advance()
        return _CMP_TOKENS[tok.kind]
    if tok.kind == "ident" and tok.text in ("in", "notin"):
        ts.advance()
        return ComparisonOp.IN if tok.text == "in" else ComparisonOp.NOTIN
    return None


# In LBS an atom sits bare inside an s-expression, so an ident followed by
# "(" is an application only when the "(" does not open a structural form.
_LBS_STOP_HEADS = frozenset(("not", "cond", "all", "and", "or", "exists", "judge", "content"))


def _term(ts: _TokenStream, lbs: bool = False) -> Term:
    tok = ts.peek()
    if tok.kind == "number":
        ts.advance()
        return Constant(tok.text)
    if tok.kind == "ident":
        ts.advance()
        follows_call = ts.peek().kind == "("
        if follows_call and lbs:
            after = ts.peek(1)
            if after.kind == "ident" and after.text in _LBS_STOP_HEADS:
                follows_call = False
        if follows_call:
            ts.advance()
            args = [_term(ts, lbs)]
            while ts.accept(","):
                args.append(_term(ts, lbs))
            ts.expect(")")
            return Application(tok.text, tuple(args))
        return Variable(tok.text)
    raise ts.fail(["identifier", "number"])


def _atom(ts: _TokenStream, lbs: bool = False) -> AtomF:
    left = _term(ts, lbs)
    op = _cmp_op(ts)
    if op is not None:
        right = _term(ts, lbs)
        if op in (ComparisonOp.IN, ComparisonOp.NOTIN) and isinstance(right, Variable):
            # The right operand of a membership test names a set.
            right = Constant(right.name)
        return AtomF(Compare(left, op, right))
    if isinstance(left, Application):
        return AtomF(Pred(left.function, left.args))
    if isinstance(left, Variable):
        return AtomF(Prop(left.name))
    raise ts.fail(["comparison operator"])


def _unary(ts: _TokenStream) -> Formula:
    if ts.accept("~"):
        return Not(_unary(ts))
    if ts.accept("("):
        f = _formula(ts)
        ts.expect(")")
        return f
    tok = ts.peek()
    if tok.kind in ("ident", "number"):
        return _atom(ts)
    raise ts.fail(["'~'", "'('", "identifier", "number"])


def _and(ts: _TokenStream) -> Formula:
    f = _unary(ts)
    while ts.accept("&"):
        f = And(f, _unary(ts))
    return f


def _or(ts: _TokenStream) -> Formula:
    f = _and(ts)
    while ts.accept("|"):
        f = Or(f, _and(ts))
    return f


def _implies(ts: _TokenStream) -> Formula:
    # right operand goes through _formula so quantifiers need no parens there
    f = _or(ts)
    if ts.accept("->"):
        return Cond(f, _formula(ts))
    return f


def _varlist(ts: _TokenStream) -> tuple:
    names = [ts.expect("ident", "variable name")]
    while ts.accept(","):
        names.append(ts.expect("ident", "variable name"))
    seen = set()
    for tok in names:
        if tok.text in seen:
            raise ParseError(tok.span, ["a distinct variable name"], f"'{tok.text}'")
        seen.add(tok.text)
    return tuple(tok.text for tok in names)


def _quant(ts: _TokenStream) -> Formula:
    kw = ts.advance()
    kind = QuantKind.FORALL if kw.text == "forall" else QuantKind.EXISTS
    names = _varlist(ts)
    guard = None
    if ts.accept("["):
        guard = _formula(ts)
        ts.expect("]")
    ts.expect(".")
    body = _formula(ts)
    return Quant(QuantBlock(kind, names, guard), body)


def _formula(ts: _TokenStream) -> Formula:
    tok = ts.peek()
    if tok.kind == "ident" and tok.text in ("forall", "exists"):
        return _quant(ts)
    return _implies(ts)


def parse_modern(text: str) -> Judgment:
    ts = _TokenStream(tokenize(text))
    asserted = ts.accept("|-") is not None
    body = _formula(ts)
    ts.expect("eof", "end of input")
    return Judgment(asserted, body)


# ---------------------------------------------------------------------------
# Linear stroke serialization

_NON_KERNEL_HEADS = ("and", "or", "exists")


def _lbs_formula(ts: _TokenStream) -> Formula:
    if ts.peek().kind != "(":
        return _atom(ts, lbs=True)
    open_tok = ts.advance()
    head = ts.peek()
    if head.kind != "ident":
        raise ts.fail(["'not'", "'cond'", "'all'"])
    if head.text in _NON_KERNEL_HEADS:
        raise ParseError(
            head.span,
            ["a kernel node ('not', 'cond', 'all')"],
            f"non-kernel token '{head.text}'",
        )
    ts.advance()
    if head.text == "not":
        body = _lbs_formula(ts)
        ts.expect(")")
        return Not(body)
    if head.text == "cond":
        condition = _lbs_formula(ts)
        consequent = _lbs_formula(ts)
        ts.expect(")")
        return Cond(condition, consequent)
    if head.text == "all":
        names = [ts.expect("ident", "variable name")]
        while ts.peek().kind == "ident":
            names.append(ts.advance())
        seen = set()
        for tok in names:
            if tok.text in seen:
                raise ParseError(tok.span, ["a distinct variable name"], f"'{tok.text}'")
            seen.add(tok.text)
        ts.expect(":")
        guard = None
        if ts.peek().kind != "=>":
            guard = _lbs_formula(ts)
        ts.expect("=>")
        body = _lbs_formula(ts)
        ts.expect(")")
        block = QuantBlock(QuantKind.FORALL, tuple(t.text for t in names), guard)
        return Quant(block, body)
    raise ParseError(open_tok.span, ["'not'", "'cond'", "'all'"], f"'{head.text}'")


def parse_lbs(text: str) -> Judgment:
    ts = _TokenStream(tokenize(text))
    ts.expect("(")
    head = ts.expect("ident", "'judge' or 'content'")
    if head.text not in ("judge", "content"):
        raise ParseError(head.span, ["'judge'", "'content'"], f"'{head.text}'")
    body = _lbs_formula(ts)
    ts.expect(")")
    ts.expect("eof", "end of input")
    return Judgment(head.text == "judge", body)
