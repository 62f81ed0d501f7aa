"""Instance generation, edge-list export and SVG diagrams."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator
from xml.sax.saxutils import escape

from .model import Color, Coloring, Permutation, ScanlineChain
from .oracle import GeneralGraph

MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class GeneratorConfig:
    n: int
    seed: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be at least 1, got {self.n}")
        if not 0 <= self.seed <= MASK64:
            raise ValueError("seed must fit in 64 unsigned bits")


def splitmix64(seed: int) -> Iterator[int]:
    state = seed & MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        yield z ^ (z >> 31)


def generate_random(cfg: GeneratorConfig) -> Permutation:
    """Fisher-Yates from the top index down; swap index is ``next % (i + 1)``."""
    bottom = list(range(1, cfg.n + 1))
    rng = splitmix64(cfg.seed)
    for i in range(cfg.n - 1, 0, -1):
        j = next(rng) % (i + 1)
        bottom[i], bottom[j] = bottom[j], bottom[i]
    return Permutation(tuple(bottom))


def export_edges(p: Permutation) -> str:
    return GeneralGraph.from_permutation(p).to_text()


STROKES = {
    Color.BLACK: "#000000",
    Color.WHITE: "#ffffff",
    Color.UNCOLORED: "#9a9a9a",
}


def render_diagram(
    p: Permutation,
    coloring: Coloring | None = None,
    chain: ScanlineChain | None = None,
    spacing: float = 40.0,
) -> str:
    """Two rails, one segment per vertex, dashed scanlines through gap midpoints.

    White segments get a thin dark outline so they remain visible.
    """
    n = p.n
    margin = 30.0
    top_y, bottom_y = 30.0, 130.0
    width = 2 * margin + (n - 1) * spacing
    height = bottom_y + 30.0

    def x_at(position: float) -> float:
        return margin + (position - 1) * spacing

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width:g}" height="{height:g}" viewBox="0 0 {width:g} {height:g}">',
        f'<rect x="0" y="0" width="{width:g}" height="{height:g}" fill="#f4f1e8"/>',
    ]
    left, right = margin - spacing / 2, x_at(n) + spacing / 2
    for y, rail in ((top_y, "top"), (bottom_y, "bottom")):
        out.append(
            f'<line class="rail" data-rail="{rail}" x1="{left:g}" y1="{y:g}" '
            f'x2="{right:g}" y2="{y:g}" stroke="#444444" stroke-width="1"/>'
        )

    for k in p.vertices():
        color = coloring[k] if coloring is not None else Color.UNCOLORED
        x1, x2 = x_at(k), x_at(p.pos[k])
        ends = f'x1="{x1:g}" y1="{top_y:g}" x2="{x2:g}" y2="{bottom_y:g}"'
        if color is Color.WHITE:
            out.append(f'<line {ends} stroke="#000000" stroke-width="4"/>')
        out.append(
            f'<line class="segment" data-vertex="{k}" data-color="{color.value}" '
            f'{ends} stroke="{STROKES[color]}" stroke-width="2.5"/>'
        )
        out.append(f'<text x="{x1:g}" y="{top_y - 8:g}" text-anchor="middle" font-size="12">{k}</text>')
        out.append(
            f'<text x="{x2:g}" y="{bottom_y + 18:g}" text-anchor="middle" font-size="12">{k}</text>'
        )

    for s in chain or ():
        xa, xb = x_at(s.a + 0.5), x_at(s.b + 0.5)
        label = escape(str(s))
        out.append(
            f'<line class="scanline" data-scanline="{label}" x1="{xa:g}" y1="{top_y - 4:g}" '
            f'x2="{xb:g}" y2="{bottom_y + 4:g}" stroke="#c0392b" stroke-width="1.5" '
            f'stroke-dasharray="5,4"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
