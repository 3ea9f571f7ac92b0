"""Minimal log-log scatter plots written directly as SVG."""
from __future__ import annotations

import math
from typing import Sequence
from xml.sax.saxutils import escape

WIDTH, HEIGHT = 640, 480
MARGIN = 60


def _log_range(values):
    lo = math.floor(math.log10(min(values)))
    hi = math.ceil(math.log10(max(values)))
    return lo, max(hi, lo + 1)


def _marker(shape: str, x: float, y: float, color: str) -> str:
    if shape == "triangle":
        pts = f"{x:.2f},{y - 5:.2f} {x - 4.5:.2f},{y + 3.5:.2f} {x + 4.5:.2f},{y + 3.5:.2f}"
        return f'<polygon points="{pts}" fill="none" stroke="{color}"/>'
    if shape == "plus":
        return (
            f'<path d="M{x - 5:.2f},{y:.2f}H{x + 5:.2f}M{x:.2f},{y - 5:.2f}V{y + 5:.2f}" '
            f'stroke="{color}"/>'
        )
    return f'<circle cx="{x:.2f}" cy="{y:.2f}" r="4" fill="none" stroke="{color}"/>'


def loglog_svg(
    series: Sequence[tuple[str, Sequence[float], Sequence[float], str, str]],
    title: str = "",
    xlabel: str = "degree",
    ylabel: str = "count",
) -> str:
    """Render ``(label, xs, ys, shape, color)`` series on shared log axes.

    Points with a non-positive coordinate cannot be placed and are skipped.
    ``shape`` is one of ``circle``, ``triangle``, ``plus``.
    """
    pts = [
        [(x, y) for x, y in zip(xs, ys) if x > 0 and y > 0]
        for _, xs, ys, _, _ in series
    ]
    allx = [p[0] for s in pts for p in s] or [1, 10]
    ally = [p[1] for s in pts for p in s] or [1, 10]
    x0, x1 = _log_range(allx)
    y0, y1 = _log_range(ally)
    pw, ph = WIDTH - 2 * MARGIN, HEIGHT - 2 * MARGIN

    def px(x):
        return MARGIN + (math.log10(x) - x0) / (x1 - x0) * pw

    def py(y):
        return HEIGHT - MARGIN - (math.log10(y) - y0) / (y1 - y0) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<rect x="{MARGIN}" y="{MARGIN}" width="{pw}" height="{ph}" fill="none" stroke="black"/>',
    ]
    for k in range(x0, x1 + 1):
        x = px(10.0**k)
        out.append(f'<line x1="{x:.2f}" y1="{HEIGHT - MARGIN}" x2="{x:.2f}" y2="{HEIGHT - MARGIN + 5}" stroke="black"/>')
        out.append(f'<text x="{x:.2f}" y="{HEIGHT - MARGIN + 18}" text-anchor="middle">1e{k}</text>')
    for k in range(y0, y1 + 1):
        y = py(10.0**k)
        out.append(f'<line x1="{MARGIN - 5}" y1="{y:.2f}" x2="{MARGIN}" y2="{y:.2f}" stroke="black"/>')
        out.append(f'<text x="{MARGIN - 8}" y="{y + 4:.2f}" text-anchor="end">1e{k}</text>')
    out.append(f'<text x="{WIDTH / 2}" y="{HEIGHT - 15}" text-anchor="middle">{escape(xlabel)}</text>')
    out.append(
        f'<text x="15" y="{HEIGHT / 2}" text-anchor="middle" '
        f'transform="rotate(-90 15 {HEIGHT / 2})">{escape(ylabel)}</text>'
    )
    if title:
        out.append(f'<text x="{WIDTH / 2}" y="30" text-anchor="middle" font-size="14">{escape(title)}</text>')

    for i, ((label, _, _, shape, color), s) in enumerate(zip(series, pts)):
        out.append(f'<g class="series" id="series-{i}">')
        out.extend(_marker(shape, px(x), py(y), color) for x, y in s)
        out.append("</g>")
        ly = MARGIN + 15 + 18 * i
        out.append(_marker(shape, WIDTH - MARGIN - 110, ly - 4, color))
        out.append(f'<text x="{WIDTH - MARGIN - 98}" y="{ly}">{escape(label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
