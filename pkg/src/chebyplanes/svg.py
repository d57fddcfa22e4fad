"""SVG drawing of a section polygon.

The polygon is drawn in an orthonormal (Euclidean) basis of its plane.
Floats appear only here, rounded to 6 decimals, and never feed back into
any metric computation.
"""
from __future__ import annotations

import math
from typing import List, Tuple

from .metric_core import scalar_to_json
from .planes import SectionPolygon, section_edge_lengths

__all__ = ["plane_basis", "section_svg"]

_SIZE = 480
_MARGIN = 80


def plane_basis(normal) -> Tuple[List[float], List[float]]:
    """Two orthonormal vectors spanning the plane with the given normal."""
    n = [float(c) for c in normal]
    # Seed with the axis least aligned with the normal.
    k = min(range(3), key=lambda i: (abs(n[i]), i))
    seed = [0.0, 0.0, 0.0]
    seed[k] = 1.0
    nn = sum(c * c for c in n)
    proj = sum(s * c for s, c in zip(seed, n)) / nn
    e1 = [s - proj * c for s, c in zip(seed, n)]
    norm = math.sqrt(sum(c * c for c in e1))
    e1 = [c / norm for c in e1]
    e2 = [
        n[1] * e1[2] - n[2] * e1[1],
        n[2] * e1[0] - n[0] * e1[2],
        n[0] * e1[1] - n[1] * e1[0],
    ]
    norm = math.sqrt(sum(c * c for c in e2))
    e2 = [c / norm for c in e2]
    return e1, e2


def _fmt(x: float) -> str:
    s = f"{x:.6f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _label(p) -> str:
    return "(" + ", ".join(str(scalar_to_json(c)) for c in p) + ")"


def section_svg(poly: SectionPolygon) -> str:
    e1, e2 = plane_basis(poly.plane.normal)
    flat = [
        (sum(a * float(c) for a, c in zip(e1, v)), sum(a * float(c) for a, c in zip(e2, v)))
        for v in poly.vertices
    ]
    extent = max(max(abs(x), abs(y)) for x, y in flat) or 1.0
    scale = (_SIZE / 2 - _MARGIN) / extent
    half = _SIZE / 2
    screen = [(round(half + x * scale, 6), round(half - y * scale, 6)) for x, y in flat]

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" height="{_SIZE}" '
        f'viewBox="0 0 {_SIZE} {_SIZE}">',
        f"<title>{poly.shape.value} section of {poly.plane!r}, radius {poly.radius}</title>",
        '<polygon fill="#d9d9d9" stroke="black" stroke-width="1.5" points="'
        + " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in screen)
        + '"/>',
        f'<circle cx="{_fmt(half)}" cy="{_fmt(half)}" r="3" fill="black"/>',
        f'<text x="{_fmt(half + 6)}" y="{_fmt(half + 16)}" font-size="13">O</text>',
    ]
    for (x, y), v in zip(screen, poly.vertices):
        out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="black"/>')
        dx, dy = x - half, y - half
        norm = math.hypot(dx, dy) or 1.0
        lx, ly = x + 18 * dx / norm, y + 18 * dy / norm
        anchor = "start" if dx > 1e-9 else ("end" if dx < -1e-9 else "middle")
        out.append(
            f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" font-size="12" '
            f'text-anchor="{anchor}">{_label(v)}</text>'
        )
    lengths = section_edge_lengths(poly)
    k = len(screen)
    for i, length in enumerate(lengths):
        (x0, y0), (x1, y1) = screen[i], screen[(i + 1) % k]
        mx, my = (x0 + x1) / 2, (y0 + y1) / 2
        dx, dy = mx - half, my - half
        norm = math.hypot(dx, dy) or 1.0
        lx, ly = mx - 16 * dx / norm, my - 16 * dy / norm
        out.append(
            f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" font-size="12" fill="#444" '
            f'text-anchor="middle">{scalar_to_json(length)}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
