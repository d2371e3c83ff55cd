"""SVG pictures of chain graphs and convex partitions.

Fire-and-forget documentation output: fixed viewport, deterministic text,
chains drawn as two facing parabola arcs with the alternating edges between
them, convex partitions drawn on a circle.
"""

from __future__ import annotations

import math

from .doublechain import ChainGraph, edge_kind, realize
from .geometry import PathPartition

_WIDTH, _HEIGHT, _MARGIN = 640, 480, 40

_STYLE = {
    "upper": 'stroke="#1f77b4" stroke-width="2"',
    "lower": 'stroke="#2ca02c" stroke-width="2"',
    "alternating": 'stroke="#d62728" stroke-width="1.5" stroke-dasharray="6 3"',
    "chord": 'stroke="#1f77b4" stroke-width="2"',
}


def _header() -> list[str]:
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" '
        f'height="{_HEIGHT}" viewBox="0 0 {_WIDTH} {_HEIGHT}">',
        f'<rect width="{_WIDTH}" height="{_HEIGHT}" fill="white"/>',
    ]


def _fit(points: dict[int, tuple[float, float]]) -> dict[int, tuple[float, float]]:
    xs = [p[0] for p in points.values()]
    ys = [p[1] for p in points.values()]
    span_x = max(xs) - min(xs) or 1.0
    span_y = max(ys) - min(ys) or 1.0
    scale = min((_WIDTH - 2 * _MARGIN) / span_x, (_HEIGHT - 2 * _MARGIN) / span_y)
    return {
        v: (
            _MARGIN + (x - min(xs)) * scale,
            _HEIGHT - _MARGIN - (y - min(ys)) * scale,  # flip: SVG y grows down
        )
        for v, (x, y) in points.items()
    }


def _finish(lines: list[str], pts: dict[int, tuple[float, float]]) -> str:
    for v in sorted(pts):
        x, y = pts[v]
        lines.append(f'<circle cx="{x:.1f}" cy="{y:.1f}" r="4" fill="#333"/>')
        lines.append(
            f'<text x="{x + 6:.1f}" y="{y - 6:.1f}" font-size="12" '
            f'font-family="sans-serif">{v}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def chain_graph_svg(graph: ChainGraph) -> str:
    """Draw a double-chain edge set on its built-in realization."""
    real = realize(graph.config, validate=False)
    raw = {v: (float(x), float(y)) for v, (x, y) in real.coordinates.items()}
    pts = _fit(raw)
    lines = _header()
    for edge in sorted(graph.edges):
        (x1, y1), (x2, y2) = pts[edge[0]], pts[edge[1]]
        style = _STYLE[edge_kind(edge, graph.config)]
        lines.append(
            f'<line x1="{x1:.1f}" y1="{y1:.1f}" x2="{x2:.1f}" y2="{y2:.1f}" {style}/>'
        )
    return _finish(lines, pts)


def partition_svg(part: PathPartition) -> str:
    """Draw a convex partition on a circle, labels clockwise from the top."""
    n = part.n
    raw = {}
    for v in range(1, n + 1):
        angle = math.pi / 2 - 2 * math.pi * (v - 1) / n
        raw[v] = (math.cos(angle), math.sin(angle))
    pts = _fit(raw)
    lines = _header()
    for a, b in sorted(part.edges()):
        (x1, y1), (x2, y2) = pts[a], pts[b]
        lines.append(
            f'<line x1="{x1:.1f}" y1="{y1:.1f}" x2="{x2:.1f}" y2="{y2:.1f}" '
            f'{_STYLE["chord"]}/>'
        )
    return _finish(lines, pts)
