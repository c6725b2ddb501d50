"""SVG rendering of the n = 2 chamber decomposition."""
from __future__ import annotations

import math
from fractions import Fraction

from . import __version__, polytope
from .chambers import Slice

PALETTE = ["#e8f1fa", "#fde9d9", "#e6f4e1", "#f3e5f5", "#fff8d6", "#e0f2f1", "#fbe4ec", "#ede7f6",
           "#f1f8e9", "#fff3e0"]


def _cell_vertices(sl: Slice, signs) -> list:
    forms = list(sl.polytope) + [h.scale(-s) for h, s in zip(sl.hyperplanes, signs)]
    pts = polytope.vertices([list(f.w) for f in forms], [-f.const for f in forms])
    return _ccw(pts)


def _ccw(pts):
    if not pts:
        return pts
    cx = sum(p[0] for p in pts) / len(pts)
    cy = sum(p[1] for p in pts) / len(pts)
    return sorted(pts, key=lambda p: math.atan2(float(p[1] - cy), float(p[0] - cx)))


def _segment(sl: Slice, h) -> list:
    forms = list(sl.polytope)
    A = [list(f.w) for f in forms] + [list(h.w), [-a for a in h.w]]
    b = [-f.const for f in forms] + [-h.const, h.const]
    return polytope.vertices(A, b)


def render_svg(sl: Slice, chambers, scale: int = 220, margin: int = 40) -> str:
    if sl.n != 2:
        raise ValueError("plotting is available for n = 2 only")
    outline = polytope.vertices([list(f.w) for f in sl.polytope], [-f.const for f in sl.polytope])
    xmax = max(p[0] for p in outline)
    ymax = max(p[1] for p in outline)
    width = int(margin * 2 + scale * xmax)
    height = int(margin * 2 + scale * ymax)

    def X(v):
        return f"{margin + float(v) * scale:.2f}"

    def Y(v):
        return f"{height - margin - float(v) * scale:.2f}"

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
           f'viewBox="0 0 {width} {height}">',
           f"<!-- vgit {__version__}: gamma = 1 slice, n = 2 -->",
           '<rect width="100%" height="100%" fill="white"/>']
    for c in chambers:
        pts = _cell_vertices(sl, c.signs)
        poly = " ".join(f"{X(p[0])},{Y(p[1])}" for p in pts)
        out.append(f'<polygon points="{poly}" fill="{PALETTE[c.id % len(PALETTE)]}" stroke="none"/>')
    for k, h in enumerate(sl.hyperplanes):
        seg = _segment(sl, h)
        if len(seg) < 2:
            continue
        (x1, y1), (x2, y2) = seg[0], seg[-1]
        labels = ", ".join(w.label for w in sl.walls_on(k))
        out.append(f'<line x1="{X(x1)}" y1="{Y(y1)}" x2="{X(x2)}" y2="{Y(y2)}" stroke="#333" '
                   f'stroke-width="1.2"><title>{labels}</title></line>')
    poly = " ".join(f"{X(p[0])},{Y(p[1])}" for p in _ccw(outline))
    out.append(f'<polygon points="{poly}" fill="none" stroke="black" stroke-width="2"/>')
    for c in chambers:
        out.append(f'<text x="{X(c.rep[0])}" y="{Y(c.rep[1])}" font-size="10" text-anchor="middle" '
                   f'font-family="sans-serif">{c.id}</text>')
    out.append(f'<text x="{X(xmax / 2)}" y="{height - 8}" font-size="12" text-anchor="middle" '
               f'font-family="sans-serif">w1</text>')
    out.append(f'<text x="12" y="{Y(ymax / 2)}" font-size="12" font-family="sans-serif">w2</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
