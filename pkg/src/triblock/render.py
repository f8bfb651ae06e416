"""Deterministic SVG rendering: solid initial segments, dashed blockers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List

from .arrangement import TriangleArrangement, sbar_vertex_map
from .kernel import Point2, Rat, Seg


@dataclass(frozen=True)
class RenderSpec:
    width: int = 480
    margin: int = 20
    vertex_radius: Fraction = Fraction(5, 2)
    initial_style: str = 'stroke="#000000" stroke-width="1.5"'
    blocking_style: str = ('stroke="#b03030" stroke-width="1.2" '
                           'stroke-dasharray="6 4"')
    edge_style: str = 'stroke="#000000" stroke-width="2"'


def _fmt(q: Rat) -> str:
    scaled = round(q * 100)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    return f"{sign}{scaled // 100}.{scaled % 100:02d}"


def render_svg(arr: TriangleArrangement, spec: RenderSpec = RenderSpec()) -> str:
    xs = [c.x for c in arr.corners]
    ys = [c.y for c in arr.corners]
    minx, maxx, miny, maxy = min(xs), max(xs), min(ys), max(ys)
    span = max(maxx - minx, maxy - miny, Fraction(1))
    scale = Fraction(spec.width) / span
    h = (maxy - miny) * scale + 2 * spec.margin
    w = (maxx - minx) * scale + 2 * spec.margin

    def to_px(p: Point2):
        # y grows upward in the plane, downward in SVG
        return ((p.x - minx) * scale + spec.margin,
                (maxy - p.y) * scale + spec.margin)

    def path(s: Seg, style: str) -> str:
        (x1, y1), (x2, y2) = to_px(s.a), to_px(s.b)
        return (f'<path d="M {_fmt(x1)} {_fmt(y1)} L {_fmt(x2)} {_fmt(y2)}" '
                f'fill="none" {style}/>')

    parts: List[str] = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(Fraction(w))}" height="{_fmt(Fraction(h))}" '
        f'viewBox="0 0 {_fmt(Fraction(w))} {_fmt(Fraction(h))}">',
    ]
    for e in arr.edges():
        parts.append(path(e, spec.edge_style))
    for s in arr.initial:
        parts.append(path(s, spec.initial_style))
    for b in arr.blocking:
        parts.append(path(b, spec.blocking_style))
    for p in sorted(sbar_vertex_map(arr)):
        x, y = to_px(p)
        parts.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" '
                     f'r="{_fmt(spec.vertex_radius)}" fill="#202020"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
