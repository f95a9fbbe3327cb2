"""Deterministic SVG drawings of tilings.

Coordinates are decimal expansions of the exact values, so the same tiling
always yields the same bytes.  The y axis is flipped to screen orientation.
"""
from __future__ import annotations

from .document import FORMAT_VERSION
from .exactfield import QS3, qs3_approx
from .tiles import Tiling, canonical_triangle

FILLS = ("#e8c170", "#7fa6c9")  # direct and mirrored placements


def _fmt(x: QS3, digits: int) -> str:
    s = qs3_approx(x, digits)
    if "." in s:
        s = s.rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _extent(values: list[QS3]) -> tuple[QS3, QS3]:
    lo = hi = values[0]
    for v in values[1:]:
        if v < lo:
            lo = v
        if v > hi:
            hi = v
    return lo, hi


def render_svg(t: Tiling, digits: int = 9) -> str:
    verts = t.target.vertices
    x0, x1 = _extent([v.x for v in verts])
    y0, y1 = _extent([-v.y for v in verts])
    w, h = x1 - x0, y1 - y0
    pad = (w if w > h else h) / 50
    f = lambda x: _fmt(x, digits)  # noqa: E731
    params = ",".join(f"{k}={t.params[k]}" for k in sorted(t.params))
    stroke = f(pad / 10)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f"<!-- tile={t.shape} variant={t.shape.variant.value} family={t.label or '-'} "
        f"params={params or '-'} N={t.count} format_version={FORMAT_VERSION} -->",
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{f(x0 - pad)} {f(y0 - pad)} {f(w + 2 * pad)} {f(h + 2 * pad)}">',
        f'<g stroke="#333333" stroke-width="{stroke}" stroke-linejoin="round">',
    ]
    base = canonical_triangle(t.shape).vertices
    for pl in t.placements:
        # apply the raw map so even a broken document can be drawn
        pts = " ".join(f"{f(v.x)},{f(-v.y)}" for v in map(pl.iso.apply, base))
        fill = FILLS[1] if pl.iso.det() < 0 else FILLS[0]
        lines.append(f'<polygon points="{pts}" fill="{fill}"/>')
    lines.append("</g>")
    outline = " L ".join(f"{f(v.x)},{f(-v.y)}" for v in verts)
    lines.append(f'<path d="M {outline} Z" fill="none" stroke="#000000" stroke-width="{f(pad / 4)}"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
