"""SVG drawing of a 2D fan: one shaded sector per maximal cone, rays to a fixed radius."""
from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .cones import Fan
from .errors import ToricError

SIZE = 400
RADIUS = 170
FILLS = ("#cfe2f3", "#fce5cd", "#d9ead3", "#ead1dc")


def _tip(v, scale=1.0) -> tuple[float, float]:
    length = math.hypot(*v)
    c = SIZE / 2
    # SVG y grows downward.
    return c + scale * RADIUS * v[0] / length, c - scale * RADIUS * v[1] / length


def _pt(p) -> str:
    return f"{p[0]:.3f},{p[1]:.3f}"


def fan_to_svg(f: Fan, title: str = "") -> str:
    if f.dim != 2:
        raise ToricError("SVG output is only available for 2D fans")
    c = SIZE / 2
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
           f'viewBox="0 0 {SIZE} {SIZE}">']
    if title:
        out.append(f"<title>{escape(title)}</title>")
    for i, k in enumerate(f.maximal_cones):
        pts = [(c, c)] + [_tip(r) for r in k.rays]
        out.append(f'<polygon points="{" ".join(_pt(p) for p in pts)}" '
                   f'fill="{FILLS[i % len(FILLS)]}" stroke="none" fill-opacity="0.8"/>')
    for k in f.maximal_cones:
        middle = [sum(r[j] / math.hypot(*r) for r in k.rays) for j in range(2)]
        x, y = _tip(middle, 0.55)
        out.append(f'<text x="{x:.3f}" y="{y:.3f}" font-size="12" text-anchor="middle">'
                   f'index {k.index()}</text>')
    for r in f.rays():
        x, y = _tip(r)
        out.append(f'<line x1="{c:.3f}" y1="{c:.3f}" x2="{x:.3f}" y2="{y:.3f}" '
                   f'stroke="black" stroke-width="1.5"/>')
        lx, ly = _tip(r, 1.08)
        out.append(f'<text x="{lx:.3f}" y="{ly:.3f}" font-size="11" text-anchor="middle">'
                   f'{escape(str(tuple(r)))}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
