"""Two-way bridge between modern first-order notation and Begriffsschrift.

The library parses modern text and the linear kernel serialization,
desugars surface connectives to the negation/conditional/universal kernel,
negates by quantifier flipping, checks equivalence by truth table or
bounded model search, and renders kernel formulas as two-dimensional
stroke diagrams (unicode, ascii, svg).
"""

from .ast import (
    Application,
    Atom,
    AtomF,
    And,
    Compare,
    ComparisonOp,
    Cond,
    Constant,
    Formula,
    Judgment,
    Not,
    Or,
    Pred,
    Prop,
    Quant,
    QuantBlock,
    QuantKind,
    Term,
    Variable,
    children,
    free_variables,
    structurally_equal,
    with_children,
)
from .kernel import EncodingMode, KernelError, desugar, is_kernel, kernel_violation, negate, resugar
from .layout import Diagram, DiagramNode, GlyphKind, layout
from .parser import ParseError, SourceSpan, parse_lbs, parse_modern
from .printer import print_lbs, print_modern
from .render import Backend, RenderOptions, render_svg, render_text
from .semantics import (
    Interpretation,
    QuantifiedInputError,
    SemanticsError,
    Signature,
    SignatureTooLargeError,
    TruthTable,
    UnboundVariableError,
    bounded_counterexample,
    enumerate_interpretations,
    equivalent_bounded,
    equivalent_propositional,
    evaluate,
    format_truth_table,
    signature_of,
    truth_table,
)

__version__ = "0.1.0"

__all__ = [
    "And",
    "Application",
    "Atom",
    "AtomF",
    "Backend",
    "Compare",
    "ComparisonOp",
    "Cond",
    "Constant",
    "Diagram",
    "DiagramNode",
    "EncodingMode",
    "Formula",
    "GlyphKind",
    "Interpretation",
    "Judgment",
    "KernelError",
    "Not",
    "Or",
    "ParseError",
    "Pred",
    "Prop",
    "Quant",
    "QuantBlock",
    "QuantKind",
    "QuantifiedInputError",
    "RenderOptions",
    "SemanticsError",
    "Signature",
    "SignatureTooLargeError",
    "SourceSpan",
    "Term",
    "TruthTable",
    "UnboundVariableError",
    "Variable",
    "bounded_counterexample",
    "children",
    "desugar",
    "enumerate_interpretations",
    "equivalent_bounded",
    "equivalent_propositional",
    "evaluate",
    "format_truth_table",
    "free_variables",
    "is_kernel",
    "kernel_violation",
    "layout",
    "negate",
    "parse_lbs",
    "parse_modern",
    "print_lbs",
    "print_modern",
    "render_svg",
    "render_text",
    "resugar",
    "signature_of",
    "structurally_equal",
    "truth_table",
    "with_children",
    "__version__",
]
