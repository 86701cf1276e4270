"""SVG pictures of polytopes in rank 2 and 3."""

from __future__ import annotations

import math
from fractions import Fraction

from afgr.errors import DomainError
from afgr.orders import positive_cone_coefficients
from afgr.polytope import Polytope, coset_lattice_points

UNIT = 60.0
MARGIN = 30.0


def _plane(p) -> tuple[float, float]:
    c = positive_cone_coefficients(p)
    if c is None:
        raise DomainError("only SL coweights can be drawn")
    if len(p) == 2:
        return (float(c[0]) * UNIT, 0.0)
    # alpha_1 along the x-axis, alpha_2 at 120 degrees; y grows downward in SVG
    x = float(c[0]) * UNIT + float(c[1]) * UNIT * math.cos(2 * math.pi / 3)
    y = float(c[1]) * UNIT * math.sin(2 * math.pi / 3)
    return (x, -y)


def _fmt(v: float) -> str:
    s = f"{v:.2f}"
    return "0.00" if s == "-0.00" else s


def render(P: Polytope, lattice: bool = True, title: str | None = None) -> str:
    n = P.rank
    if n > 3:
        raise DomainError(f"rendering is limited to rank <= 3, got {n}")
    if n < 2:
        raise DomainError("nothing to draw in rank 1")
    ring = [_plane(v) for v in P.cyclic_vertices()]
    dots = [_plane(q) for q in coset_lattice_points(P, (Fraction(0),) * n)] if lattice else []
    xs = [p[0] for p in ring + dots]
    ys = [p[1] for p in ring + dots]
    x0, y0 = min(xs) - MARGIN, min(ys) - MARGIN
    w, h = max(xs) - min(xs) + 2 * MARGIN, max(ys) - min(ys) + 2 * MARGIN
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(h)}" width="{_fmt(w)}" height="{_fmt(h)}">',
    ]
    if title:
        out.append(f"  <title>{title}</title>")
    pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in ring)
    if len(ring) >= 3:
        out.append(f'  <polygon points="{pts}" fill="#cfe0f3" stroke="#1f4e79" stroke-width="2"/>')
    elif len(ring) == 2:
        out.append(f'  <polyline points="{pts}" fill="none" stroke="#1f4e79" stroke-width="2"/>')
    for x, y in dots:
        out.append(f'  <circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="2.5" fill="#444"/>')
    for x, y in ring:
        out.append(f'  <circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="4" fill="#1f4e79"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
