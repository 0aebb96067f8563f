"""Backends that turn a Diagram into text or SVG, byte-deterministically.

Text backends paint grid cells one character per cell. The two maps:

    unicode:  stroke "─"  vertical "│"  corner "└"  tick "┬"
              branch anchor "┬"  judgment bar "├"  concavity "(x)"
    ascii:    stroke "-"  vertical "|"  corner "+"  tick "!"
              branch anchor "+"  judgment bar "|"  concavity "(x)"

Lines are right-trimmed and the output ends with a single newline.

The SVG backend draws one path per merged horizontal run (ticks and branch
anchors do not interrupt a run, concavities do), one path per vertical, one
short vertical path per negation tick (length row_height/3, below the
stroke), one semicircular arc per concavity with its letters centered above,
and one text element per leaf label. Coordinates use at most two fraction
digits and attributes appear in a fixed order.
"""

from dataclasses import dataclass
from enum import Enum

from .layout import Diagram, GlyphItem, GlyphKind


class Backend(Enum):
    UNICODE = "unicode"
    ASCII = "ascii"
    SVG = "svg"


@dataclass(frozen=True)
class RenderOptions:
    backend: Backend = Backend.UNICODE
    cell_width_px: int = 12
    row_height_px: int = 24
    stroke_width_px: float = 1.5

    def __post_init__(self):
        if self.cell_width_px <= 0 or self.row_height_px <= 0 or self.stroke_width_px <= 0:
            raise ValueError("render dimensions must be positive")


_CHARS = {
    Backend.UNICODE: {
        "stroke": "─",
        "vertical": "│",
        "corner": "└",
        "tick": "┬",
        "anchor": "┬",
        "judge": "├",
    },
    Backend.ASCII: {
        "stroke": "-",
        "vertical": "|",
        "corner": "+",
        "tick": "!",
        "anchor": "+",
        "judge": "|",
    },
}


def render_text(diagram: Diagram, options: RenderOptions = RenderOptions()) -> str:
    if options.backend not in _CHARS:
        raise ValueError("render_text handles the unicode and ascii backends")
    chars = _CHARS[options.backend]
    grid: dict = {}

    def put(row: int, col: int, text: str) -> None:
        for i, ch in enumerate(text):
            grid[(row, col + i)] = ch

    for item in diagram.draw_items:
        if item.kind is GlyphKind.STROKE:
            put(item.row, item.col, chars["stroke"] * item.width)
        elif item.kind is GlyphKind.NEG_TICK:
            put(item.row, item.col, chars["tick"])
        elif item.kind is GlyphKind.JUDGE_BAR:
            put(item.row, item.col, chars["judge"])
        elif item.kind is GlyphKind.BRANCH_CORNER:
            put(item.row, item.col, chars["corner"])
        elif item.kind is GlyphKind.CONCAVITY:
            put(item.row, item.col, f"({item.text})")
        elif item.kind is GlyphKind.VERTICAL:
            put(item.row, item.col, chars["anchor"])
            for r in range(item.row + 1, item.end_row):
                put(r, item.col, chars["vertical"])
    for row, col, text in diagram.draw_labels:
        put(row, col + 1, text)

    lines = []
    for row in range(diagram.n_rows):
        cols = [c for (r, c) in grid if r == row]
        line = "".join(grid.get((row, c), " ") for c in range(max(cols) + 1))
        lines.append(line.rstrip())
    return "\n".join(lines) + "\n"


def _n(value: float) -> str:
    text = f"{value:.2f}"
    return text.rstrip("0").rstrip(".") if "." in text else text


def _esc(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def render_svg(diagram: Diagram, options: RenderOptions = RenderOptions(Backend.SVG)) -> str:
    cw = options.cell_width_px
    rh = options.row_height_px
    margin = cw

    def x(col: int) -> float:
        return margin + col * cw

    def y(row: int) -> float:
        return margin + row * rh + rh / 2

    # Horizontal line runs: cells the stroke passes through, per row.
    # BRANCH_CORNER and JUDGE_BAR cells start their run at the cell middle.
    runs: dict = {}  # row -> list of (col, width, half_start)
    for item in diagram.draw_items:
        if item.kind is GlyphKind.STROKE:
            runs.setdefault(item.row, []).append((item.col, item.width, False))
        elif item.kind in (GlyphKind.NEG_TICK, GlyphKind.VERTICAL):
            runs.setdefault(item.row, []).append((item.col, 1, False))
        elif item.kind in (GlyphKind.BRANCH_CORNER, GlyphKind.JUDGE_BAR):
            runs.setdefault(item.row, []).append((item.col, 1, True))

    def merged(row: int) -> list:
        out = []
        for col, width, half in sorted(runs.get(row, [])):
            if out and out[-1][1] == col:
                out[-1][1] = col + width
            else:
                out.append([col, col + width, half])
        return out

    sw = _n(options.stroke_width_px)
    paths = []
    texts = []

    def path(cls: str, d: str) -> None:
        paths.append(
            f'<path class="{cls}" d="{d}" fill="none" stroke="#000" '
            f'stroke-width="{sw}" stroke-linecap="round"/>'
        )

    for row in sorted(runs):
        for start, end, half in merged(row):
            x0 = x(start) + (cw / 2 if half else 0)
            path("stroke", f"M{_n(x0)} {_n(y(row))}H{_n(x(end))}")

    font = round(rh * 0.58, 2)
    small = round(rh * 0.45, 2)
    for item in diagram.draw_items:
        if item.kind is GlyphKind.JUDGE_BAR:
            bx = x(item.col) + cw / 2
            path("bar", f"M{_n(bx)} {_n(y(item.row) - rh / 4)}V{_n(y(item.row) + rh / 4)}")
        elif item.kind is GlyphKind.VERTICAL:
            vx = x(item.col) + cw / 2
            path("vertical", f"M{_n(vx)} {_n(y(item.row))}V{_n(y(item.end_row))}")
        elif item.kind is GlyphKind.NEG_TICK:
            tx = x(item.col) + cw / 2
            path("tick", f"M{_n(tx)} {_n(y(item.row))}V{_n(y(item.row) + rh / 3)}")
        elif item.kind is GlyphKind.CONCAVITY:
            x0, x1 = x(item.col), x(item.col + item.width)
            rx = (x1 - x0) / 2
            ry = rh / 4
            path("concavity", f"M{_n(x0)} {_n(y(item.row))}A{_n(rx)} {_n(ry)} 0 0 0 {_n(x1)} {_n(y(item.row))}")
            texts.append(
                f'<text class="letters" x="{_n((x0 + x1) / 2)}" y="{_n(y(item.row) - 3)}" '
                f'text-anchor="middle" font-family="monospace" '
                f'font-size="{_n(small)}">{_esc(item.text)}</text>'
            )
    for row, col, text in diagram.draw_labels:
        texts.append(
            f'<text class="label" x="{_n(x(col + 1))}" y="{_n(y(row) + font * 0.35)}" '
            f'font-family="monospace" font-size="{_n(font)}">{_esc(text)}</text>'
        )

    width = _n(2 * margin + diagram.n_cols * cw)
    height = _n(2 * margin + diagram.n_rows * rh)
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">'
    )
    return "\n".join([head, *paths, *texts, "</svg>"]) + "\n"
