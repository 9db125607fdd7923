"""Text and SVG drawings of tile diagrams."""
from __future__ import annotations

from xml.sax.saxutils import escape

from .states import BLACK, HORIZONTAL, SINGLE, VERTICAL, TileDiagram

CELL = 20
RADIUS = 2
INSET = 2
MARGIN = 24
DARK = "#303030"
LIGHT = "#c8c8c8"


def glyph_grid(d: TileDiagram) -> list[list[str]]:
    grid = [["."] * d.n for _ in range(d.m)]
    for t in d.tiles:
        if t.kind == SINGLE:
            g = "S"
        else:
            g = "B" if t.color == BLACK else "G"
        for r, c in t.squares():
            grid[r - 1][c - 1] = g
    return grid


def render_ascii(d: TileDiagram) -> str:
    """Glyph grid (B black double, G grey double, S single, . empty) then one line per tile."""
    lines = ["".join(row) for row in glyph_grid(d)]
    lines += [f"{t.kind} {t.color} row={t.row} col={t.col}" for t in d.tiles]
    return "\n".join(lines) + "\n"


def render_svg(d: TileDiagram) -> str:
    w = MARGIN + d.n * CELL + INSET
    h = MARGIN + d.m * CELL + INSET
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        '<g class="grid" stroke="#d04040" stroke-width="0.5">',
    ]
    x0, y0 = MARGIN, MARGIN
    for r in range(d.m + 1):
        out.append(f'<line x1="{x0}" y1="{y0 + r * CELL}" x2="{x0 + d.n * CELL}" y2="{y0 + r * CELL}"/>')
    for c in range(d.n + 1):
        out.append(f'<line x1="{x0 + c * CELL}" y1="{y0}" x2="{x0 + c * CELL}" y2="{y0 + d.m * CELL}"/>')
    out.append("</g>")
    out.append('<g class="labels" font-family="serif" font-size="9" text-anchor="middle">')
    for c in range(1, d.n + 1):
        out.append(f'<text x="{x0 + (c - 0.5) * CELL:g}" y="{y0 - 6}">{escape(f"|{c}⟩")}</text>')
    for r in range(1, d.m + 1):
        out.append(f'<text x="{x0 - 11}" y="{y0 + (r - 0.5) * CELL + 3:g}">{escape(f"|{r}⟩")}</text>')
    out.append("</g>")
    out.append('<g class="tiles" stroke="#000000" stroke-width="1">')
    for t in d.tiles:
        cols = 2 if t.kind == HORIZONTAL else 1
        rows = 2 if t.kind == VERTICAL else 1
        x = x0 + (t.col - 1) * CELL + INSET
        y = y0 + (t.row - 1) * CELL + INSET
        fill = DARK if t.color == BLACK else LIGHT
        out.append(
            f'<rect class="tile {t.kind} {t.color}" data-row="{t.row}" data-col="{t.col}" '
            f'x="{x}" y="{y}" width="{cols * CELL - 2 * INSET}" height="{rows * CELL - 2 * INSET}" '
            f'rx="{RADIUS}" ry="{RADIUS}" fill="{fill}"/>'
        )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
