"""Deterministic SVG pictures of simulated orbits.

Bricks of one repeating block share a color and are numbered in destruction
order starting from 0; the first brick of the block after the last rendered
one is drawn black.  Bricks destroyed before periodicity sets in are drawn in
a reserved gray.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .simulator import OrbitEvent

DEFAULT_COLORS = ("#2f9e44", "#3b5bdb", "#e8590c", "#9c36b5")
PREPERIOD_COLOR = "#adb5bd"
MARKER_COLOR = "#000000"


@dataclass(frozen=True)
class FigureSpec:
    """What to draw: events, block length, palette, geometry scale."""

    events: tuple[OrbitEvent, ...]
    period: int
    colors: tuple[str, ...] = DEFAULT_COLORS
    scale: int = 24
    preperiod: int = 0


def _fmt(v: Fraction | int | float) -> str:
    return f"{float(v):.3f}".rstrip("0").rstrip(".")


def render_svg(fig: FigureSpec) -> str:
    """Render the figure as standalone SVG 1.1 text (byte-deterministic)."""
    if not fig.events:
        raise ValueError("cannot render an empty event list")
    if fig.period < 1:
        raise ValueError(f"period must be >= 1, got {fig.period}")
    if fig.preperiod < 0 or fig.preperiod + fig.period > len(fig.events):
        raise ValueError(
            f"{len(fig.events)} events cannot hold preperiod {fig.preperiod} "
            f"plus one period of {fig.period}"
        )

    full = (len(fig.events) - fig.preperiod) // fig.period
    cut = fig.preperiod + full * fig.period
    shown = list(fig.events[:cut])
    marker = fig.events[cut] if cut < len(fig.events) else None
    drawn = shown + ([marker] if marker else [])

    xs = [e.brick.x for e in drawn]
    ys = [e.brick.y for e in drawn]
    min_x, max_x = min(xs), max(xs) + 1
    min_y, max_y = min(ys), max(ys) + 1
    pad = 1
    s = fig.scale

    def px(x: Fraction | int) -> str:
        return _fmt((Fraction(x) - min_x + pad) * s)

    def py(y: Fraction | int) -> str:
        # SVG's y axis points down; the plane's points up.
        return _fmt((max_y + pad - Fraction(y)) * s)

    width = _fmt((max_x - min_x + 2 * pad) * s)
    height = _fmt((max_y - min_y + 2 * pad) * s)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
    ]

    font = _fmt(Fraction(2 * s, 5))
    for i, event in enumerate(shown):
        if i < fig.preperiod:
            color = PREPERIOD_COLOR
            number = i
        else:
            color = fig.colors[((i - fig.preperiod) // fig.period) % len(fig.colors)]
            number = (i - fig.preperiod) % fig.period
        bx, by = event.brick.x, event.brick.y
        lines.append(
            f'<rect x="{px(bx)}" y="{py(by + 1)}" width="{_fmt(s)}" height="{_fmt(s)}" '
            f'fill="{color}" stroke="#333333" stroke-width="1"/>'
        )
        lines.append(
            f'<text x="{px(Fraction(2 * bx + 1, 2))}" y="{py(Fraction(2 * by + 1, 2))}" '
            f'font-size="{font}" text-anchor="middle" dominant-baseline="central" '
            f'fill="#ffffff">{number}</text>'
        )
    if marker:
        bx, by = marker.brick.x, marker.brick.y
        lines.append(
            f'<rect x="{px(bx)}" y="{py(by + 1)}" width="{_fmt(s)}" height="{_fmt(s)}" '
            f'fill="{MARKER_COLOR}" stroke="#333333" stroke-width="1"/>'
        )

    points = " ".join(f"{px(e.hit_point[0])},{py(e.hit_point[1])}" for e in drawn)
    lines.append(
        f'<polyline points="{points}" fill="none" stroke="#222222" stroke-width="1"/>'
    )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
