"""Exponent-set pictures for two-variable monomial ideals.

x-exponent runs horizontally, y-exponent vertically (origin bottom left).
The ASCII form uses one glyph per lattice point; a point takes the glyph of
the last layer that contains it, so nested differential powers show up as
nested regions.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .core import MonomialIdeal, PreconditionError, contains_monomial

BASE_GLYPH = "#"
OVERLAY_GLYPHS = "ox+*@%&="
EMPTY_GLYPH = "."
SVG_COLOURS = ("#4c72b0", "#dd8452", "#55a868", "#c44e52", "#8172b3", "#937860", "#da8bc3")
CELL = 28


@dataclass(frozen=True)
class StaircaseRender:
    ideal: MonomialIdeal
    overlays: Sequence[tuple[str, MonomialIdeal]] = field(default_factory=tuple)
    format: str = "ascii"
    extent: Optional[tuple[int, int]] = None
    label: str = "I"


def required_extent(layers: Sequence[MonomialIdeal]) -> tuple[int, int]:
    xs = [g[0] for I in layers for g in I.gens] or [0]
    ys = [g[1] for I in layers for g in I.gens] or [0]
    return max(xs), max(ys)


def _layers(req: StaircaseRender):
    layers = [(req.label, req.ideal)] + list(req.overlays)
    for _, I in layers:
        if I.d != 2:
            raise PreconditionError(f"staircases need two variables, got d = {I.d}")
    need = required_extent([I for _, I in layers])
    ext = need if req.extent is None else tuple(req.extent)
    if ext[0] < need[0] or ext[1] < need[1]:
        raise PreconditionError(f"extent {ext} too small; need at least {need}")
    return layers, ext


def cell_layer(layers, point) -> Optional[int]:
    """Index of the last layer containing ``point``, or None."""
    hit = None
    for k, (_, I) in enumerate(layers):
        if contains_monomial(I, point):
            hit = k
    return hit


def glyph(k: Optional[int]) -> str:
    if k is None:
        return EMPTY_GLYPH
    if k == 0:
        return BASE_GLYPH
    return OVERLAY_GLYPHS[(k - 1) % len(OVERLAY_GLYPHS)]


def render_ascii(req: StaircaseRender) -> str:
    layers, (ex, ey) = _layers(req)
    w = max(len(str(ex)), 1)
    lw = len(str(ey))
    lines = []
    for y in range(ey, -1, -1):
        cells = " ".join(glyph(cell_layer(layers, (x, y))).rjust(w) for x in range(ex + 1))
        lines.append(f"{y:>{lw}} | {cells}")
    lines.append(" " * lw + " +-" + "-" * ((w + 1) * (ex + 1)))
    lines.append(" " * lw + "   " + " ".join(str(x).rjust(w) for x in range(ex + 1)))
    lines.append("")
    for k, (name, I) in enumerate(layers):
        lines.append(f"{glyph(k)}  {name} = {I}")
    return "\n".join(lines) + "\n"


def render_svg(req: StaircaseRender) -> str:
    layers, (ex, ey) = _layers(req)
    margin = 40
    width = margin * 2 + CELL * (ex + 1)
    height = margin * 2 + CELL * (ey + 1) + 18 * len(layers)
    top = margin

    def px(x):
        return margin + CELL * x

    def py(y):
        return top + CELL * (ey + 1 - y)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]
    for k, (name, I) in enumerate(layers):
        colour = SVG_COLOURS[k % len(SVG_COLOURS)]
        out.append(f'<g id="layer{k}" fill="{colour}" fill-opacity="0.35" stroke="{colour}">')
        for gx, gy in I.gens:
            if gx > ex or gy > ey:
                continue
            out.append(f'<rect x="{px(gx)}" y="{py(ey + 1)}" width="{CELL * (ex + 1 - gx)}" '
                       f'height="{py(gy) - py(ey + 1)}"/>')
        out.append("</g>")
    for x in range(ex + 1):
        out.append(f'<text x="{px(x) + CELL // 2}" y="{py(0) + 14}" font-size="11" '
                   f'text-anchor="middle">{x}</text>')
    for y in range(ey + 1):
        out.append(f'<text x="{margin - 6}" y="{py(y) - CELL // 2 + 4}" font-size="11" '
                   f'text-anchor="end">{y}</text>')
    out.append(f'<line x1="{px(0)}" y1="{py(0)}" x2="{px(ex + 1)}" y2="{py(0)}" stroke="black"/>')
    out.append(f'<line x1="{px(0)}" y1="{py(0)}" x2="{px(0)}" y2="{py(ey + 1)}" stroke="black"/>')
    for k, (name, I) in enumerate(layers):
        colour = SVG_COLOURS[k % len(SVG_COLOURS)]
        ly = py(0) + 34 + 18 * k
        out.append(f'<rect x="{margin}" y="{ly - 10}" width="12" height="12" fill="{colour}" fill-opacity="0.35" stroke="{colour}"/>')
        text = f"{name} = {I}".replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")
        out.append(f'<text x="{margin + 18}" y="{ly}" font-size="12">{text}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_staircase(req: StaircaseRender) -> str:
    if req.format == "ascii":
        return render_ascii(req)
    if req.format == "svg":
        return render_svg(req)
    raise ValueError(f"unknown staircase format {req.format!r}")
