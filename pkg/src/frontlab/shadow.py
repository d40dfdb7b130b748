"""Shadows: the front's region decomposition decorated with gleams.

The gleam of a region X is chi(X) + (C_in - C_out - V) / 2, where C_in and
C_out count cusps pointing into and out of X and V counts the double-point
corners of X at which the coorientation points into X on both sides or out
of X on both sides.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .arrangement import CORNER_RULE, Arrangement, region_stats
from .front import Front, cusp_data, double_points, format_rational, index


@dataclass(frozen=True)
class ShadowRegion:
    id: int
    compact: bool
    index: int
    gleam: Fraction | None   # None for the unbounded region
    chi: int
    c_in: int
    c_out: int
    v: int
    corners: int


@dataclass(frozen=True)
class Shadow:
    front: Front
    regions: tuple
    arrangement: Arrangement

    def compact_regions(self):
        return [r for r in self.regions if r.compact]


def gleam(stats, tamper: bool = False) -> Fraction:
    g = stats.chi + Fraction(stats.c_in - stats.c_out - stats.v, 2)
    if tamper:
        # deliberately wrong variant, used only as a negative control
        g += Fraction(stats.v, 2)
    return g


def shadow_of_front(front: Front, corner_rule: str = CORNER_RULE, tamper: bool = False) -> Shadow:
    arr = Arrangement(front)
    out = []
    for r in arr.regions:
        st = region_stats(r, corner_rule)
        g = gleam(st, tamper) if r.compact else None
        out.append(ShadowRegion(r.id, r.compact, r.index, g, st.chi, st.c_in, st.c_out,
                                st.v, len(r.corners)))
    return Shadow(front, tuple(out), arr)


def sigma_value(shadow: Shadow) -> Fraction:
    """Sum of index times gleam over the compact regions, unchecked."""
    total = Fraction(0)
    for r in shadow.regions:
        if r.gleam is None:
            if r.index:
                raise ValueError(f"region {r.id} has no gleam but index {r.index}")
            continue
        total += r.index * r.gleam
    return total


def sigma(shadow: Shadow) -> int:
    """Sum of index times gleam over the compact regions."""
    total = sigma_value(shadow)
    if total.denominator != 1:
        raise ArithmeticError(f"sigma is not an integer: {total}")
    return int(total)


def parity_failures(shadow: Shadow):
    """Compact regions whose gleam is not congruent to corners/2 mod 1."""
    bad = []
    for r in shadow.regions:
        if r.gleam is not None and (r.gleam - Fraction(r.corners, 2)).denominator != 1:
            bad.append(r.id)
    return bad


def parity_check(shadow: Shadow) -> bool:
    return not parity_failures(shadow)


def dump(shadow: Shadow) -> dict:
    return {
        "index": index(shadow.front),
        "double_points": len(shadow.arrangement.double_points),
        "sigma": sigma(shadow),
        "parity": parity_check(shadow),
        "regions": [
            {
                "id": r.id,
                "compact": r.compact,
                "index": r.index,
                "gleam": None if r.gleam is None else format_rational(r.gleam),
                "chi": r.chi,
                "c_in": r.c_in,
                "c_out": r.c_out,
                "v": r.v,
                "corners": r.corners,
            }
            for r in shadow.regions
        ],
    }


def to_json(shadow: Shadow) -> str:
    return json.dumps(dump(shadow), indent=2, sort_keys=True)


def render_svg(shadow: Shadow, size: int = 480) -> str:
    """Deterministic SVG: the front, its cusps and double points, and each
    compact region labelled with its gleam."""
    front = shadow.front
    arr = shadow.arrangement
    pts = front.points
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0) or Fraction(1)
    pad = 20
    k = Fraction(size - 2 * pad) / span

    def tr(p):
        # flip y so the picture has the usual orientation
        return (float(pad + (p[0] - x0) * k), float(pad + (y1 - p[1]) * k))

    def fmt(v):
        return f"{v:.2f}"

    poly = " ".join(f"{fmt(a)},{fmt(b)}" for a, b in map(tr, pts))
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<polygon points="{poly}" fill="none" stroke="black" stroke-width="1.5"/>',
    ]
    for v in front.vertices:
        if v.cusp:
            a, b = tr(v.point)
            parts.append(f'<circle cx="{fmt(a)}" cy="{fmt(b)}" r="3" fill="red"/>')
    for dp in double_points(front):
        a, b = tr(dp.location)
        parts.append(f'<circle cx="{fmt(a)}" cy="{fmt(b)}" r="2.5" fill="blue"/>')
    for c in front.cones:
        a, b = tr(c.point)
        parts.append(f'<rect x="{fmt(a - 3)}" y="{fmt(b - 3)}" width="6" height="6" fill="green"/>')
    by_id = {r.id: r for r in shadow.regions}
    for reg in arr.regions:
        if not reg.compact:
            continue
        a, b = tr(arr.sample_point(reg))
        g = format_rational(by_id[reg.id].gleam)
        parts.append(f'<text x="{fmt(a)}" y="{fmt(b)}" font-size="10">{g}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def cusp_summary(front: Front):
    cd = cusp_data(front)
    return {"c_plus": format_rational(cd.c_plus), "c_minus": format_rational(cd.c_minus)}
