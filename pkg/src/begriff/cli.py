"""Command-line front end.

Six subcommands: parse, translate, render, table, equiv, negate. Every
command reads its input from a positional argument, from ``--file PATH``,
or from standard input when neither is given; ``equiv`` takes two formulas
(two positionals, or the first two non-blank lines of the file/stdin).

Exit codes:
    0  success (equiv: equivalent)
    1  equiv: not equivalent
    2  parse or usage error
    3  kernel violation
    4  unwritable output path
    5  quantified input where a truth table was requested
    6  bounded-check signature too large

Standard output carries only payload; diagnostics go to standard error.
"""

import argparse
import sys

from . import __version__
from .ast import Judgment
from .kernel import EncodingMode, KernelError, desugar, kernel_violation, negate, resugar
from .layout import layout
from .parser import ParseError, parse_lbs, parse_modern
from .printer import print_lbs, print_modern
from .render import Backend, RenderOptions, render_svg, render_text
from .semantics import (
    QuantifiedInputError,
    SignatureTooLargeError,
    bounded_counterexample,
    format_assignment,
    format_interpretation,
    format_truth_table,
    is_propositional,
    propositional_counterexample,
    truth_table,
)


class _UsageError(Exception):
    pass


def _read_source(args, count: int = 1) -> list:
    """Collect `count` input texts from positional args, --file, or stdin."""
    positional = [t for t in (getattr(args, "input", None), getattr(args, "input2", None)) if t is not None]
    if positional and args.file is not None:
        raise _UsageError("give the input inline or with --file, not both")
    if positional:
        if len(positional) != count:
            raise _UsageError(f"expected {count} formulas, got {len(positional)}")
        return positional
    if args.file is not None:
        try:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise _UsageError(f"cannot read {args.file}: {exc.strerror}")
    else:
        text = sys.stdin.read()
    if count == 1:
        return [text]
    lines = [line for line in text.splitlines() if line.strip()]
    if len(lines) < count:
        raise _UsageError(f"expected {count} formulas, one per line")
    return lines[:count]


def _parse(text: str, fmt: str) -> Judgment:
    try:
        return parse_lbs(text) if fmt == "lbs" else parse_modern(text)
    except ParseError as exc:
        exc.source = text
        raise


def _print(j: Judgment, fmt: str) -> str:
    return print_lbs(j) if fmt == "lbs" else print_modern(j)


def _mode(name: str) -> EncodingMode:
    return EncodingMode.FAITHFUL if name == "faithful" else EncodingMode.CLASSICAL


def _report_parse_error(source: str, err: ParseError) -> None:
    """Render a ParseError with a 1-based line:column header and a caret."""
    idx = len(source)
    byte = 0
    for i, ch in enumerate(source):
        if byte >= err.span.start:
            idx = i
            break
        byte += len(ch.encode("utf-8"))
    line_no = source.count("\n", 0, idx) + 1
    line_start = source.rfind("\n", 0, idx) + 1
    line_end = source.find("\n", idx)
    if line_end < 0:
        line_end = len(source)
    col = idx - line_start + 1
    print(f"error: {line_no}:{col}: {err}", file=sys.stderr)
    print(f"  {source[line_start:line_end]}", file=sys.stderr)
    print(f"  {' ' * (col - 1)}^", file=sys.stderr)


def cmd_parse(args) -> int:
    source = _read_source(args)[0]
    print(_print(_parse(source, args.format), args.format))
    return 0


def cmd_translate(args) -> int:
    source = _read_source(args)[0]
    j = _parse(source, getattr(args, "from"))
    mode = _mode(args.mode)
    if args.to == "kernel":
        body = desugar(j.body, mode)
    elif args.to == "modern":
        body = resugar(j.body)
    else:  # lbs: keep kernel-form input as is, otherwise desugar with a notice
        if kernel_violation(j.body, allow_multi=True, allow_guard=True) is None:
            body = j.body
        else:
            print(f"notice: input is not in kernel form; desugared with mode {args.mode}", file=sys.stderr)
            body = desugar(j.body, mode)
    out_fmt = "modern" if args.to == "modern" else "lbs"
    print(_print(Judgment(j.asserted, body), out_fmt))
    return 0


def cmd_render(args) -> int:
    source = _read_source(args)[0]
    j = _parse(source, getattr(args, "from"))
    body = desugar(j.body, _mode(args.mode), expand_blocks=False)
    diagram = layout(Judgment(j.asserted, body))
    backend = Backend(args.backend)
    options = RenderOptions(backend=backend)
    text = render_svg(diagram, options) if backend is Backend.SVG else render_text(diagram, options)
    if args.output is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.output}: {exc.strerror}", file=sys.stderr)
        return 4
    return 0


def cmd_table(args) -> int:
    source = _read_source(args)[0]
    j = _parse(source, "modern")
    table = truth_table(j.body)
    print(format_truth_table(table, j.body, style=args.values))
    return 0


def cmd_equiv(args) -> int:
    first, second = _read_source(args, count=2)
    f1 = _parse(first, "modern").body
    f2 = _parse(second, "modern").body
    if is_propositional(f1) and is_propositional(f2):
        witness = propositional_counterexample(f1, f2)
        if witness is None:
            print("EQUIVALENT")
            return 0
        print(f"NOT EQUIVALENT (counterexample: {format_assignment(witness)})")
        return 1
    found = bounded_counterexample(f1, f2, max_domain=args.max_domain)
    if found is None:
        print(f"EQUIVALENT UP TO DOMAIN {args.max_domain}")
        return 0
    interp, env = found
    print(f"NOT EQUIVALENT (counterexample: {format_interpretation(interp, env)})")
    return 1


def cmd_negate(args) -> int:
    source = _read_source(args)[0]
    j = _parse(source, getattr(args, "from"))
    print(_print(Judgment(j.asserted, negate(j.body)), args.to))
    return 0


def _add_io(sub, two: bool = False) -> None:
    sub.add_argument("input", nargs="?", help="formula text (default: stdin)")
    if two:
        sub.add_argument("input2", nargs="?", help="second formula")
    sub.add_argument("--file", help="read input from a file instead")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="begriff",
        description="Convert between modern first-order notation and Begriffsschrift diagrams.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("parse", help="parse and echo the canonical form")
    _add_io(p)
    p.add_argument("--format", choices=("modern", "lbs"), default="modern")
    p.set_defaults(run=cmd_parse)

    p = commands.add_parser("translate", help="convert between notations")
    _add_io(p)
    p.add_argument("--from", choices=("modern", "lbs"), default="modern")
    p.add_argument("--to", choices=("modern", "lbs", "kernel"), default="kernel")
    p.add_argument("--mode", choices=("faithful", "classical"), default="classical")
    p.set_defaults(run=cmd_translate)

    p = commands.add_parser("render", help="draw the formula as a diagram")
    _add_io(p)
    p.add_argument("--from", choices=("modern", "lbs"), default="modern")
    p.add_argument("--backend", choices=("unicode", "ascii", "svg"), default="unicode")
    p.add_argument("--mode", choices=("faithful", "classical"), default="faithful")
    p.add_argument("-o", "--output", help="write to a file instead of stdout")
    p.set_defaults(run=cmd_render)

    p = commands.add_parser("table", help="print the truth table")
    _add_io(p)
    p.add_argument("--values", choices=("wf", "tf"), default="wf")
    p.set_defaults(run=cmd_table)

    p = commands.add_parser("equiv", help="check two formulas for equivalence")
    _add_io(p, two=True)
    p.add_argument("--max-domain", type=int, default=3)
    p.set_defaults(run=cmd_equiv)

    p = commands.add_parser("negate", help="negate with quantifier flipping")
    _add_io(p)
    p.add_argument("--from", choices=("modern", "lbs"), default="modern")
    p.add_argument("--to", choices=("modern", "lbs"), default="modern")
    p.set_defaults(run=cmd_negate)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except ParseError as exc:
        _report_parse_error(getattr(exc, "source", ""), exc)
        return 2
    except KernelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except QuantifiedInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5
    except SignatureTooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 6
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
