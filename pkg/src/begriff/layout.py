"""Two-dimensional layout of kernel formulas on an integer grid.

The tree structure is the bracketing: a conditional's consequent continues on
the current row and its condition starts on the row immediately below the
last row its consequent subtree used, so nested conditions stack downward
depth-first. Each negation is one tick on the stroke, each universal block
one concavity (with all of its letters over one arc), each conditional one
vertical branch ending in a corner. Column positions are grid cells; the
backends translate cells to characters or pixels without moving anything.
"""

from dataclasses import dataclass, field
from enum import Enum

from .ast import AtomF, Formula, Judgment, Not, Cond, Quant
from .kernel import KernelError, kernel_violation
from .printer import atom_text


class GlyphKind(Enum):
    STROKE = "stroke"
    NEG_TICK = "neg_tick"
    CONCAVITY = "concavity"
    JUDGE_BAR = "judge_bar"
    BRANCH_CORNER = "branch_corner"
    VERTICAL = "vertical"


@dataclass
class GlyphItem:
    kind: GlyphKind
    row: int
    col: int
    width: int = 1
    end_row: int | None = None  # verticals: the corner row they reach
    text: str | None = None     # concavities: comma-joined letters


@dataclass
class DiagramNode:
    role: str  # "atom", "not", "cond", "forall"
    row: int
    col_start: int
    col_end: int
    glyph_run: list = field(default_factory=list)
    leaf_label: str | None = None
    children: list = field(default_factory=list)


@dataclass
class Diagram:
    asserted: bool
    root: DiagramNode
    prelude: list          # judgment bar and content stroke glyphs
    draw_items: list       # every glyph in emission order
    draw_labels: list      # (row, col, text) in emission order
    n_rows: int
    n_cols: int

    def count(self, kind: GlyphKind) -> int:
        return sum(1 for item in self.draw_items if item.kind is kind)


class _Builder:
    def __init__(self):
        self.items = []
        self.labels = []
        self.max_col = 0

    def add(self, item: GlyphItem) -> GlyphItem:
        self.items.append(item)
        self.max_col = max(self.max_col, item.col + item.width)
        return item

    def add_label(self, row: int, col: int, text: str) -> None:
        self.labels.append((row, col, text))
        self.max_col = max(self.max_col, col + 1 + len(text))

    def emit(self, f: Formula, row: int, col: int):
        """Returns (node, last_row used by the subtree)."""
        if isinstance(f, AtomF):
            label = atom_text(f.atom)
            self.add_label(row, col, label)
            node = DiagramNode("atom", row, col, col + 1 + len(label), leaf_label=label)
            return node, row
        if isinstance(f, Not):
            tick = self.add(GlyphItem(GlyphKind.NEG_TICK, row, col))
            stroke = self.add(GlyphItem(GlyphKind.STROKE, row, col + 1))
            child, last = self.emit(f.body, row, col + 2)
            node = DiagramNode("not", row, col, child.col_end, [tick, stroke], None, [child])
            return node, last
        if isinstance(f, Quant):
            letters = ",".join(f.block.vars)
            width = len(letters) + 2
            arc = self.add(GlyphItem(GlyphKind.CONCAVITY, row, col, width, text=letters))
            stroke = self.add(GlyphItem(GlyphKind.STROKE, row, col + width))
            child, last = self.emit(f.body, row, col + width + 1)
            node = DiagramNode("forall", row, col, child.col_end, [arc, stroke], None, [child])
            return node, last
        if isinstance(f, Cond):
            vertical = self.add(GlyphItem(GlyphKind.VERTICAL, row, col))
            lead = self.add(GlyphItem(GlyphKind.STROKE, row, col + 1, 2))
            consequent, cons_last = self.emit(f.consequent, row, col + 3)
            cond_row = cons_last + 1
            vertical.end_row = cond_row
            corner = self.add(GlyphItem(GlyphKind.BRANCH_CORNER, cond_row, col))
            cond_lead = self.add(GlyphItem(GlyphKind.STROKE, cond_row, col + 1))
            condition, cond_last = self.emit(f.condition, cond_row, col + 2)
            node = DiagramNode(
                "cond",
                row,
                col,
                max(consequent.col_end, condition.col_end),
                [vertical, lead, corner, cond_lead],
                None,
                [condition, consequent],
            )
            return node, cond_last
        raise TypeError(f"not a kernel formula: {f!r}")


def layout(j: Judgment) -> Diagram:
    """Place j on the grid. The body must be kernel-form; multi-letter
    concavities are permitted, guarded blocks are not (guards have no glyph:
    desugar turns them into condition branches first)."""
    violation = kernel_violation(j.body, allow_multi=True, allow_guard=False)
    if violation is not None:
        raise KernelError(f"cannot lay out {violation}; desugar first")
    b = _Builder()
    prelude = []
    col = 0
    if j.asserted:
        prelude.append(b.add(GlyphItem(GlyphKind.JUDGE_BAR, 0, 0)))
        col = 1
    prelude.append(b.add(GlyphItem(GlyphKind.STROKE, 0, col, 2)))
    root, last_row = b.emit(j.body, 0, col + 2)
    return Diagram(
        asserted=j.asserted,
        root=root,
        prelude=prelude,
        draw_items=b.items,
        draw_labels=b.labels,
        n_rows=last_row + 1,
        n_cols=b.max_col,
    )
