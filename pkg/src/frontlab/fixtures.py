"""Deterministic fixture fronts.

Three kinds of generators live here:

* small named fronts (circle, saucer, figure-eight, lenses around a cone);
* a seeded random corpus, drawn from a normal-angle/support-sign model so
  that every sample is a front by construction;
* move pairs: a local template inside a disk (the move itself), closed up
  outside the disk by connectors running along concentric lanes.  The
  before and after fronts share the connectors exactly.

All randomness flows through `random.Random(seed)`.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .front import (LEFT, RIGHT, Cone, Front, Vertex, check, cross, double_points,
                    flip, index, sub, validate)

# -- small named fronts -----------------------------------------------------


def circle(n: int = 16, radius: int = 1000, ccw: bool = True, outward: bool = True) -> Front:
    pts = []
    for k in range(n):
        t = 2 * math.pi * k / n
        pts.append((round(radius * math.cos(t)), round(radius * math.sin(t))))
    if not ccw:
        pts.reverse()
    # for a counterclockwise polygon the outward normal is on the right
    side = RIGHT if (ccw == outward) else LEFT
    return Front.from_points(pts, (), side)


def saucer(ccw: bool = True) -> Front:
    """A lens with two cusps and both normals pointing up."""
    if ccw:
        pts = [(0, 0), (2, -1), (4, -1), (6, 0), (4, 1), (2, 1)]
        return Front.from_points(pts, (0, 3), LEFT)
    pts = [(0, 0), (2, 1), (4, 1), (6, 0), (4, -1), (2, -1)]
    return Front.from_points(pts, (0, 3), LEFT)


def eight(n: int = 24, scale: int = 1000) -> Front:
    """Figure-eight without cusps: the left lobe turns counterclockwise."""
    pts = []
    for k in range(n):
        t = (k + 0.5) * 2 * math.pi / n
        pts.append((round(scale * math.sin(t)), round(0.6 * scale * math.sin(t) * math.cos(t))))
    return Front.from_points(pts, (), LEFT)


def _cpow(x, y, k):
    """(x + iy)^k exactly."""
    rx, ry = 1, 0
    for _ in range(k):
        rx, ry = rx * x - ry * y, rx * y + ry * x
    return rx, ry


def lens(k: int = 1, mu: int = 2, sub_steps: int = 8) -> Front:
    """A two-cusp lens around a cone point at the origin, winding k times
    clockwise around it.

    Built as the image under z -> z^k of a clockwise saucer that encloses
    the origin off-centre, so both cusps are positive.
    """
    if k < 1:
        raise ValueError("k must be positive")
    # clockwise saucer: upper arc eastwards, lower arc westwards, normals up
    base = [(-50, 6), (-20, 30), (25, 34), (60, 5), (30, -24), (-18, -28)]
    cusps = {0, 3}
    pts = []
    flags = []
    m = sub_steps
    for i in range(len(base)):
        (ax, ay), (bx, by) = base[i], base[(i + 1) % len(base)]
        for j in range(m):
            pts.append((ax * m + (bx - ax) * j, ay * m + (by - ay) * j))
            flags.append(j == 0 and i in cusps)
    image = [_cpow(x, y, k) for x, y in pts]
    cusp_idx = [i for i, c in enumerate(flags) if c]
    return Front.from_points(image, cusp_idx, LEFT, (Cone(Fraction(0), Fraction(0), mu),))


def cone_circle(mu: int = 3, radius: int = 1000) -> Front:
    """Counterclockwise circle with outward normal around a cone at the origin."""
    f = circle(16, radius)
    return f.with_cones((Cone(Fraction(0), Fraction(0), mu),))


def saucer_with_distant_cone(mu: int = 2) -> Front:
    return saucer().with_cones((Cone(Fraction(100), Fraction(100), mu),))


NAMED = {
    "circle": lambda: circle(),
    "saucer": lambda: saucer(),
    "eight": lambda: eight(),
}


# -- random corpus ----------------------------------------------------------


def random_front(rng: random.Random, max_double_points: int = 30, max_cusps: int = 8,
                 tries: int = 500) -> Front:
    """Sample a front from a closed curve of normal angles phi and signed
    support speeds s: each edge is s * J n(phi) and the sign of s picks the
    side, so cusps sit exactly where s changes sign."""
    for _ in range(tries):
        f = _random_candidate(rng)
        if f is None:
            continue
        if f.cusp_count > max_cusps or not validate(f).ok:
            continue
        if len(double_points(f)) > max_double_points:
            continue
        return f
    raise RuntimeError("could not sample a valid front")


def _random_candidate(rng):
    k = rng.choice([-3, -2, -1, 0, 0, 1, 1, 2, 3, 4])
    if rng.random() < 0.5:
        # gentle curves
        n = rng.randint(24, 64)
        waves = [(rng.uniform(-1.4, 1.4), rng.randint(1, 3), rng.uniform(0, 2 * math.pi))
                 for _ in range(rng.randint(0, 2))]
    else:
        # curly curves: fast large swings of the normal make small loops
        n = rng.randint(80, 140)
        waves = [(rng.uniform(-4.5, 4.5), rng.randint(2, 7), rng.uniform(0, 2 * math.pi))
                 for _ in range(rng.randint(1, 3))]
    phi = []
    for i in range(n):
        t = i / n
        phi.append(2 * math.pi * k * t + sum(a * math.sin(2 * math.pi * j * t + p) for a, j, p in waves))
    steps = [phi[(i + 1) % n] - phi[i] + (2 * math.pi * k if i == n - 1 else 0) for i in range(n)]
    if any(abs(s) > math.radians(75) for s in steps):
        return None
    c0 = rng.uniform(-0.6, 1.2)
    harm = [(rng.uniform(-1, 1), rng.randint(1, 4), rng.uniform(0, 2 * math.pi))
            for _ in range(rng.randint(0, 2))]
    s = [c0 + sum(b * math.cos(2 * math.pi * j * i / n + p) for b, j, p in harm) for i in range(n)]
    normals = [(math.cos(a), math.sin(a)) for a in phi]
    for _ in range(4):
        s = _close_support(s, normals)
        if s is None:
            return None
        s = [math.copysign(max(abs(v), 0.35), v) for v in s]
    s = _close_support(s, normals)
    if s is None or any(abs(v) < 0.2 for v in s):
        return None
    signs = [v > 0 for v in s]
    for i in range(n):
        if signs[i - 1] != signs[i] and abs(steps[i - 1]) < math.radians(2):
            return None
    scale = 1000
    edges = [(round(scale * v * -ny), round(scale * v * nx)) for v, (nx, ny) in zip(s, normals)]
    rx = -sum(e[0] for e in edges)
    ry = -sum(e[1] for e in edges)
    big = max(range(n), key=lambda i: abs(edges[i][0]) + abs(edges[i][1]))
    edges[big] = (edges[big][0] + rx, edges[big][1] + ry)
    pts = [(0, 0)]
    for e in edges[:-1]:
        pts.append((pts[-1][0] + e[0], pts[-1][1] + e[1]))
    sides = [RIGHT if v > 0 else LEFT for v in s]
    return Front.from_edge_sides(pts, sides)


def _close_support(s, normals):
    # add alpha cos(phi) + beta sin(phi) to s so that sum s_i n_i = 0
    a11 = sum(nx * nx for nx, _ in normals)
    a12 = sum(nx * ny for nx, ny in normals)
    a22 = sum(ny * ny for _, ny in normals)
    bx = -sum(v * nx for v, (nx, _) in zip(s, normals))
    by = -sum(v * ny for v, (_, ny) in zip(s, normals))
    det = a11 * a22 - a12 * a12
    if abs(det) < 1e-9:
        return None
    al = (bx * a22 - by * a12) / det
    be = (a11 * by - a12 * bx) / det
    return [v + al * nx + be * ny for v, (nx, ny) in zip(s, normals)]


def corpus(seed: int, count: int = 100, include_named: bool = True):
    """Seeded list of (name, front)."""
    rng = random.Random(seed)
    out = []
    if include_named:
        out += [("circle", circle()), ("circle_cw", circle(ccw=False)),
                ("circle_inward", circle(outward=False)), ("saucer", saucer()),
                ("saucer_cw", saucer(False)), ("eight", eight()), ("sk_example", sk_example())]
    k = 0
    while len(out) < count:
        out.append((f"random-{seed}-{k}", random_front(rng)))
        k += 1
    return out


# -- closure machinery for move templates -----------------------------------


@dataclass
class Strand:
    """Piece of a front inside the template disk.

    `points` are exact; `cusps` flags interior points; `side` is the side of
    the first edge.
    """
    points: list
    cusps: list
    side: str

    @property
    def exit_side(self):
        s = self.side
        for c in self.cusps[1:-1]:
            if c:
                s = flip(s)
        return s

    def reversed(self):
        # reversing flips the side of every edge
        return Strand(self.points[::-1], self.cusps[::-1], flip(self.exit_side))

    def coflipped(self):
        return Strand(self.points, self.cusps, flip(self.side))


@dataclass
class Connector:
    points: list       # float waypoints strictly between two strands
    cusps: list


def _unit(v):
    d = math.hypot(v[0], v[1])
    return (v[0] / d, v[1] / d)


def _ray_to_radius(p, d, rho):
    # t > 0 with |p + t d| = rho
    pd = p[0] * d[0] + p[1] * d[1]
    pp = p[0] * p[0] + p[1] * p[1]
    disc = pd * pd - pp + rho * rho
    return -pd + math.sqrt(disc)


def _make_connector(x, dx, y, dy, rho, spacing, direction, flip_side, extra_turns, rng,
                    swallowtail=False):
    """Float waypoints from exit point x (heading dx) around lane `rho` to
    the entry point y (arriving along dy)."""
    pts = []
    cusps = []
    t = _ray_to_radius(x, dx, rho)
    a = (x[0] + t * dx[0], x[1] + t * dx[1])
    pts.append(a)
    th_a = math.atan2(a[1], a[0])
    lane = rho
    if flip_side:
        cusps.append(True)
        lane = rho * 0.9
        th_a += direction * math.radians(5)
        pts.append((lane * math.cos(th_a), lane * math.sin(th_a)))
        cusps.append(False)
    else:
        cusps.append(False)
    end_radius = lane + extra_turns * spacing * 0.45
    tb = _ray_to_radius(y, (-dy[0], -dy[1]), end_radius)
    b = (y[0] - tb * dy[0], y[1] - tb * dy[1])
    th_b = math.atan2(b[1], b[0])
    sweep = ((th_b - th_a) * direction) % (2 * math.pi)
    if sweep < math.radians(10):
        sweep += 2 * math.pi
    sweep += 2 * math.pi * extra_turns
    steps = max(2, math.ceil(sweep / math.radians(18)))
    lane_pts = []
    for i in range(1, steps):
        u = i / steps
        th = th_a + direction * sweep * u
        r = lane + (end_radius - lane) * u
        lane_pts.append((r * math.cos(th), r * math.sin(th)))
    if swallowtail and len(lane_pts) >= 4:
        i = rng.randint(1, len(lane_pts) - 3)
        p, q = lane_pts[i], lane_pts[i + 1]
        tail_pts, tail_cusps = _swallowtail_between(p, q, rng.random() < 0.5, rng)
        lane_flags = [False] * len(lane_pts)
        lane_pts = lane_pts[:i + 1] + tail_pts + lane_pts[i + 1:]
        lane_flags = lane_flags[:i + 1] + tail_cusps + lane_flags[i + 1:]
    else:
        lane_flags = [False] * len(lane_pts)
    pts += lane_pts
    cusps += lane_flags
    pts.append(b)
    cusps.append(False)
    return Connector(pts, cusps)


def _swallowtail_between(p, q, left, rng):
    """Swallowtail points strictly between p and q (local frame of pq)."""
    ux, uy = q[0] - p[0], q[1] - p[1]
    length = math.hypot(ux, uy)
    e = (ux / length, uy / length)
    nrm = (-e[1], e[0]) if left else (e[1], -e[0])
    a = rng.uniform(0.22, 0.3) * length
    h = rng.uniform(0.05, 0.08) * length
    b = rng.uniform(0.08, 0.12) * length
    c = rng.uniform(0.2, 0.28) * length
    x0 = 0.25 * length

    def at(s, t):
        return (p[0] + s * e[0] + t * nrm[0], p[1] + s * e[1] + t * nrm[1])

    pts = [at(x0, 0), at(x0 + a, h), at(x0 + a - b, h), at(x0 + a - b + c, 0)]
    return pts, [False, True, True, False]


def _fillet(pts, flags, max_turn_deg=50.0):
    """Cut regular corners sharper than max_turn (free points only)."""
    lim = math.cos(math.radians(max_turn_deg))
    changed = True
    while changed:
        changed = False
        out_p, out_f = [], []
        n = len(pts)
        for k in range(n):
            v = pts[k]
            if flags[k] != "free":
                out_p.append(v)
                out_f.append(flags[k])
                continue
            p, q = pts[k - 1], pts[(k + 1) % n]
            u = (v[0] - p[0], v[1] - p[1])
            w = (q[0] - v[0], q[1] - v[1])
            lu, lw = math.hypot(*u), math.hypot(*w)
            if (u[0] * w[0] + u[1] * w[1]) >= lim * lu * lw:
                out_p.append(v)
                out_f.append("free")
                continue
            a = 0.3 * min(lu, lw)
            out_p.append((v[0] - a * u[0] / lu, v[1] - a * u[1] / lu))
            out_p.append((v[0] + a * w[0] / lw, v[1] + a * w[1] / lw))
            out_f += ["free", "free"]
            changed = True
        pts, flags = out_p, out_f
    return pts, flags


@dataclass
class Closure:
    """Connectors for a cyclic order of strands, reusable across phases."""
    order: list
    connectors: list = field(default_factory=list)


def plan_closure(strands, rng, order=None, decorate=True):
    m = len(strands)
    if order is None:
        order = list(range(m))
        rest = order[1:]
        rng.shuffle(rest)
        order = [0] + rest
    radius = max(math.hypot(float(p[0]), float(p[1])) for s in strands for p in (s.points[0], s.points[-1]))
    spacing = radius * 0.7
    connectors = []
    for pos in range(m):
        s = strands[order[pos]]
        t = strands[order[(pos + 1) % m]]
        x = (float(s.points[-1][0]), float(s.points[-1][1]))
        dx = _unit((float(s.points[-1][0] - s.points[-2][0]), float(s.points[-1][1] - s.points[-2][1])))
        y = (float(t.points[0][0]), float(t.points[0][1]))
        dy = _unit((float(t.points[1][0] - t.points[0][0]), float(t.points[1][1] - t.points[0][1])))
        rho = radius * 2.2 + pos * spacing * 2
        direction = rng.choice([1, -1])
        extra = rng.choice([0, 0, 1]) if decorate else 0
        tail = decorate and rng.random() < 0.3
        connectors.append(_make_connector(x, dx, y, dy, rho, spacing, direction,
                                          s.exit_side != t.side, extra, rng, tail))
    return Closure(order, connectors)


def assemble(strands, closure: Closure) -> Front:
    """Concatenate strands and connectors into an exact front."""
    pts, flags = [], []
    for pos, si in enumerate(closure.order):
        s = strands[si]
        for k, p in enumerate(s.points):
            pts.append(p)
            flags.append("cusp" if s.cusps[k] else "fixed")
        c = closure.connectors[pos]
        for p, cu in zip(c.points, c.cusps):
            # connector cusps are pinned at their rounded position
            pts.append((round(p[0]), round(p[1])) if cu else p)
            flags.append("cusp" if cu else "free")
    # fillet works on floats; fixed points keep their exact values
    exact = {}
    fpts = []
    for k, (p, fl) in enumerate(zip(pts, flags)):
        if fl == "free":
            fpts.append(p)
        else:
            fp = (float(p[0]), float(p[1]))
            exact[fp] = p
            fpts.append(fp)
    fpts, flags = _fillet(fpts, flags)
    out = []
    cusp_idx = []
    for k, (p, fl) in enumerate(zip(fpts, flags)):
        if fl == "free":
            q = (round(p[0]), round(p[1]))
        else:
            q = exact[p]
        if out and q == out[-1]:
            continue
        if fl == "cusp":
            cusp_idx.append(len(out))
        out.append(q)
    first = strands[closure.order[0]]
    return Front.from_points(out, cusp_idx, first.side)


# -- exact rotations --------------------------------------------------------


def pythagorean_rotation(rng):
    """Integer matrix c*R with R a rotation and c = m^2 + n^2."""
    m, n = rng.randint(1, 7), rng.randint(0, 6)
    if m == n:
        m += 1
    a, b = m * m - n * n, 2 * m * n
    quarter = rng.randint(0, 3)
    for _ in range(quarter):
        a, b = -b, a
    return a, b


def _rot(p, rot):
    a, b = rot
    return (a * p[0] - b * p[1], b * p[0] + a * p[1])


def rotate_strands(strands, rot):
    return [Strand([_rot(p, rot) for p in s.points], list(s.cusps), s.side) for s in strands]


# -- move templates ---------------------------------------------------------

PHASES = ("before", "after", "singular")


def _line_strand(points, side, cusps=None):
    return Strand(list(points), cusps or [False] * len(points), side)


def tangency_template(rng, codirected: bool, normals: str, phase: str):
    """Two strands; a V-shaped bump on the upper strand dips through the
    lower one.

    `normals` is 'facing' or 'away' (safe) or 'up' / 'down' (dangerous: the
    two normals agree at the touching point).
    """
    p = _tangency_params(rng)
    return _tangency_strands(p, codirected, normals, phase)


def _tangency_params(rng):
    return dict(y0=rng.randint(200, 340), xb=rng.randint(-200, 200), w=rng.randint(600, 700),
                depth=rng.randint(50, 120))


def _tangency_strands(p, codirected, normals, phase):
    y0, xb, w, dep = p["y0"], p["xb"], p["w"], p["depth"]
    tip = {"before": dep, "after": -dep, "singular": 0}[phase]
    lower = [(-1000, 0), (1000, 0)]
    if phase == "singular":
        lower = [(-1000, 0), (xb, 0), (1000, 0)]
    upper = [(-1000, y0), (xb - w, y0), (xb, tip), (xb + w, y0), (1000, y0)]
    up_lower = {"facing": True, "away": False, "up": True, "down": False}[normals]
    up_upper = {"facing": False, "away": True, "up": True, "down": False}[normals]
    # eastward strand: LEFT normal points up
    s1 = _line_strand(lower, LEFT if up_lower else RIGHT)
    s2 = _line_strand(upper, LEFT if up_upper else RIGHT)
    if not codirected:
        s2 = s2.reversed()
    return [s1, s2]


def triple_template(rng, cyclic: bool, phase: str):
    """Three lines; the third slides across the crossing of the first two."""
    p = _triple_params(rng, cyclic)
    return _triple_strands(p, phase)


def _triple_params(rng, cyclic):
    while True:
        dirs = []
        for base in (0, 60, 120):
            a = math.radians(base + rng.uniform(-12, 12))
            dirs.append((round(50 * math.cos(a)), round(50 * math.sin(a))))
        px, py = rng.randint(-80, 80), rng.randint(-80, 80)
        delta = rng.randint(40, 110)
        signs = [rng.choice([1, -1]) for _ in range(3)]
        sides = [rng.choice([LEFT, RIGHT]) for _ in range(3)]
        p = dict(dirs=dirs, P=(px, py), delta=delta, signs=signs, sides=sides)
        if _is_cyclic(p) == cyclic:
            return p


def _triple_lines(p, phase):
    (px, py), delta = p["P"], p["delta"]
    off = {"before": delta, "after": -delta, "singular": 0}[phase]
    anchors = [(px, py), (px, py), (px, py + off)]
    return [(anchors[k], (p["dirs"][k][0] * p["signs"][k], p["dirs"][k][1] * p["signs"][k]))
            for k in range(3)]


def _is_cyclic(p):
    lines = _triple_lines(p, "before")
    pts = {}
    for i in range(3):
        for j in range(i + 1, 3):
            (a, u), (c, v) = lines[i], lines[j]
            den = cross(u, v)
            t = Fraction(cross(sub(c, a), v), den)
            pts[(i, j)] = (a[0] + t * u[0], a[1] + t * u[1])
    agree = []
    for k in range(3):
        i, j = [x for x in range(3) if x != k]
        other = pts[(i, j)]
        a, u = lines[k]
        agree.append(cross(u, sub(other, a)) > 0)
    return len(set(agree)) == 1


def _triple_strands(p, phase):
    out = []
    for k, (a, u) in enumerate(_triple_lines(p, phase)):
        start = (a[0] - 20 * u[0], a[1] - 20 * u[1])
        end = (a[0] + 20 * u[0], a[1] + 20 * u[1])
        out.append(_line_strand([start, end], p["sides"][k]))
    return out


def birth_template(rng, left: bool, phase: str):
    p = dict(x0=rng.randint(-300, -150), a=rng.randint(350, 450), h=rng.randint(50, 90),
             b=rng.randint(120, 200), c=rng.randint(300, 450), side=rng.choice([LEFT, RIGHT]))
    return _birth_strands(p, left, phase)


def _birth_strands(p, left, phase):
    x0, a, h, b, c = p["x0"], p["a"], p["h"], p["b"], p["c"]
    sg = 1 if left else -1
    if phase == "before":
        pts = [(-1000, 0), (1000, 0)]
        cusps = [False, False]
    else:
        pts = [(-1000, 0), (x0, 0), (x0 + a, sg * h), (x0 + a - b, sg * h),
               (x0 + a - b + c, 0), (1000, 0)]
        cusps = [False, False, True, True, False, False]
    return [Strand(pts, cusps, p["side"])]


def cusp_crossing_template(rng, steep: bool, phase: str):
    p = dict(h1=rng.randint(300, 500), h2=rng.randint(300, 500), xt=rng.randint(250, 450),
             c=rng.randint(40, 90), slope=rng.randint(-60, 60), rev_cusp=rng.random() < 0.5,
             rev_line=rng.random() < 0.5, cusp_side=rng.choice([LEFT, RIGHT]),
             line_side=rng.choice([LEFT, RIGHT]))
    return _cusp_crossing_strands(p, steep, phase)


def _cusp_crossing_strands(p, steep, phase):
    h1, h2, xt, c = p["h1"], p["h2"], p["xt"], p["c"]
    off = {"before": c, "after": -c, "singular": 0}[phase]
    cusp = Strand([(-1000, -h1), (xt, 0), (-1000, h2)], [False, True, False], p["cusp_side"])
    # the cusp's normal at the tip points up iff the eastward first edge has side LEFT
    tip_up = p["cusp_side"] == LEFT
    if p["rev_cusp"]:
        cusp = cusp.reversed()
    if steep:
        x = xt - off
        line = [(x - p["slope"] // 2, -1000), (x + p["slope"] // 2, 1000)]
        side = p["line_side"]
        s = _line_strand(line, side)
    else:
        s_ = p["slope"] // 4
        # eastward line through (xt, off) with slope s_/1000, normal opposite to the tip normal
        line = [(-1000, off - s_ * (1000 + xt) // 1000), (1000, off + s_ * (1000 - xt) // 1000)]
        side = RIGHT if tip_up else LEFT
        s = _line_strand(line, side)
    if p["rev_line"]:
        s = s.reversed()
    return [cusp, s]


FAMILIES = {
    # name: (template kind, template options)
    "cusp_birth_left": ("birth", dict(left=True)),
    "cusp_birth_right": ("birth", dict(left=False)),
    "safe_tangency_codirected_facing": ("tangency", dict(codirected=True, normals="facing")),
    "safe_tangency_codirected_away": ("tangency", dict(codirected=True, normals="away")),
    "safe_tangency_opposite_facing": ("tangency", dict(codirected=False, normals="facing")),
    "safe_tangency_opposite_away": ("tangency", dict(codirected=False, normals="away")),
    "triple_point_cyclic": ("triple", dict(cyclic=True)),
    "triple_point_acyclic": ("triple", dict(cyclic=False)),
    "cusp_crossing": ("cusp", dict(steep=False)),
    "cusp_pass": ("cusp", dict(steep=True)),
}

EXPECTED_DELTAS = {
    "birth": (1, 2),
    "tangency": (2, 0),
    "triple": (0, 0),
    "cusp": (0, 0),
}


@dataclass(frozen=True)
class MovePair:
    family: str
    seed: int
    instance: int
    before: Front
    after: Front


def _template_params(kind, rng, opts):
    if kind == "birth":
        return dict(x0=rng.randint(-300, -150), a=rng.randint(350, 450), h=rng.randint(50, 90),
                    b=rng.randint(120, 200), c=rng.randint(300, 450),
                    side=rng.choice([LEFT, RIGHT]))
    if kind == "tangency":
        return _tangency_params(rng)
    if kind == "triple":
        return _triple_params(rng, opts["cyclic"])
    return dict(h1=rng.randint(300, 500), h2=rng.randint(300, 500), xt=rng.randint(250, 450),
                c=rng.randint(40, 90), slope=rng.randint(-60, 60), rev_cusp=rng.random() < 0.5,
                rev_line=rng.random() < 0.5, cusp_side=rng.choice([LEFT, RIGHT]),
                line_side=rng.choice([LEFT, RIGHT]))


def _template_strands(kind, params, opts, phase):
    if kind == "birth":
        return _birth_strands(params, opts["left"], phase)
    if kind == "tangency":
        return _tangency_strands(params, opts["codirected"], opts["normals"], phase)
    if kind == "triple":
        return _triple_strands(params, phase)
    return _cusp_crossing_strands(params, opts["steep"], phase)


def move_pair(family: str, seed: int, instance: int = 0, max_tries: int = 60) -> MovePair:
    """Deterministic (before, after) pair for a move family."""
    if family not in FAMILIES:
        raise KeyError(f"unknown move family {family!r}")
    kind, opts = FAMILIES[family]
    rng = random.Random(f"{family}/{seed}/{instance}")
    dc, dk = EXPECTED_DELTAS[kind]
    for _ in range(max_tries):
        params = _template_params(kind, rng, opts)
        rot = pythagorean_rotation(rng)
        before_s = rotate_strands(_template_strands(kind, params, opts, "before"), rot)
        after_s = rotate_strands(_template_strands(kind, params, opts, "after"), rot)
        closure = plan_closure(before_s, rng)
        before = assemble(before_s, closure)
        after = assemble(after_s, closure)
        if not (validate(before).ok and validate(after).ok):
            continue
        nb, na = len(double_points(before)), len(double_points(after))
        if family == "cusp_pass":
            dc = -2
        if kind in ("tangency", "birth") or family == "cusp_pass":
            if na - nb != dc or after.cusp_count - before.cusp_count != dk:
                continue
        elif na != nb or after.cusp_count != before.cusp_count:
            continue
        return MovePair(family, seed, instance, before, after)
    raise RuntimeError(f"could not build a valid {family} pair")


# -- dangerous self-tangency (wall) pairs -----------------------------------


@dataclass(frozen=True)
class WallPair:
    seed: int
    instance: int
    before: Front
    after: Front
    loop_indices: tuple
    singular: Front | None = None


def wall_pair(seed: int, instance: int = 0, max_tries: int = 60) -> WallPair:
    rng = random.Random(f"wall/{seed}/{instance}")
    for _ in range(max_tries):
        codirected = rng.random() < 0.5
        normals = rng.choice(["up", "down"])
        params = _tangency_params(rng)
        rot = pythagorean_rotation(rng)
        strands = {ph: rotate_strands(_tangency_strands(params, codirected, normals, ph), rot)
                   for ph in PHASES}
        closure = plan_closure(strands["before"], rng)
        before = assemble(strands["before"], closure)
        after = assemble(strands["after"], closure)
        if not (validate(before).ok and validate(after).ok):
            continue
        if abs(len(double_points(after)) - len(double_points(before))) != 2:
            continue
        sing = assemble(strands["singular"], closure)
        touch = _rot((params["xb"], 0), rot)
        loops = singular_loop_indices(sing, touch)
        if loops is None or sum(loops) != index(before):
            continue
        return WallPair(seed, instance, before, after, loops, sing)
    raise RuntimeError("could not build a wall pair")


def singular_loop_indices(front: Front, touch):
    """Indices of the two loops of a front that passes twice through the
    point `touch` (both passages are vertices)."""
    pts = front.points
    hits = [k for k, p in enumerate(pts) if p == touch]
    if len(hits) != 2:
        return None
    i1, i2 = hits
    sides = front.sides
    loops = []
    for a, b in ((i1, i2), (i2, i1 + len(pts))):
        idx = [k % len(pts) for k in range(a, b)]
        lp = [pts[k] for k in idx]
        ls = [sides[k] for k in idx]
        loops.append(index(Front.from_edge_sides(lp, ls)))
    return tuple(loops)


# -- cone passage pairs -----------------------------------------------------


@dataclass(frozen=True)
class ConePair:
    mu: int
    reverse: bool
    side: str
    before: Front
    after: Front


def _polar(r, psi):
    # psi is measured from the positive y axis towards positive x
    return (round(r * math.sin(psi)), round(r * math.cos(psi)))


def cone_arc(mu: int, tau: int, psi_end: float, a: int = 150, r0: int = 600,
             r1: int = 900) -> list:
    """Upstairs arc for a cone of order mu, mapped down by z -> z^mu exactly.

    The arc comes in along the ray at angle -psi_end, runs along the line
    y = tau over |x| <= a and leaves along the ray at +psi_end.  It is
    star-shaped about the cone and its distance to the cone grows away from
    the middle, so all double points downstairs come from mirror pairs and
    only the middle part changes with tau.
    """
    step = math.radians(10.0 / mu)
    up = []
    # incoming ray and join, then the line, then the outgoing join and ray
    up.append(_polar(r1, -psi_end))
    up += _segment_points(_polar(r0, -psi_end), (-a, tau), step)
    line = []
    theta = math.atan2(a, abs(tau))
    n = max(4, math.ceil(2 * theta / step))
    for i in range(1, n):
        x = round(abs(tau) * math.tan(-theta + 2 * theta * i / n))
        line.append((x, tau))
    up += line
    up += _segment_points((a, tau), _polar(r0, psi_end), step)
    up.append(_polar(r1, psi_end))
    out = []
    for p in up:
        if not out or out[-1] != p:
            out.append(p)
    return [_cpow(x, y, mu) for x, y in out]


def _segment_points(p, q, step):
    ang = abs(math.atan2(cross(p, q), p[0] * q[0] + p[1] * q[1]))
    n = max(2, math.ceil(ang / step))
    return [(round(p[0] + (q[0] - p[0]) * i / n), round(p[1] + (q[1] - p[1]) * i / n))
            for i in range(n + 1)]


def _end_angle(mu, rng, a=150, tau=100):
    lo = math.degrees(math.atan2(a, tau)) + 4
    hi = 180 - lo
    while True:
        psi = rng.uniform(lo, hi)
        if all(abs(psi - 180 * k / mu) > 3 for k in range(1, mu)):
            return math.radians(psi)


def cone_pair(mu: int, reverse: bool = False, side: str = LEFT, seed: int = 0,
              tau: int = 100, max_tries: int = 30) -> ConePair:
    """A front before and after one of its arcs slides across a cone point
    of order mu; everything away from the cone is shared."""
    rng = random.Random(f"cone/{mu}/{reverse}/{side}/{seed}")
    cone = (Cone(Fraction(0), Fraction(0), mu),)
    for _ in range(max_tries):
        psi = _end_angle(mu, rng, tau=tau)
        direction = rng.choice([1, -1])
        fronts = {}
        closure = None
        for name, t in (("before", tau), ("after", -tau)):
            arc = cone_arc(mu, t, psi)
            strand = Strand(arc, [False] * len(arc), side)
            if closure is None:
                x = (float(arc[-1][0]), float(arc[-1][1]))
                dx = _unit((float(arc[-1][0] - arc[-2][0]), float(arc[-1][1] - arc[-2][1])))
                y = (float(arc[0][0]), float(arc[0][1]))
                dy = _unit((float(arc[1][0] - arc[0][0]), float(arc[1][1] - arc[0][1])))
                radius = math.hypot(*x)
                conn = _make_connector(x, dx, y, dy, radius * 1.5, radius * 0.5, direction,
                                       False, 0, rng)
                closure = Closure([0], [conn])
            f = assemble([strand], closure).with_cones(cone)
            fronts[name] = f.reversed() if reverse else f
        if validate(fronts["before"]).ok and validate(fronts["after"]).ok:
            break
    else:
        raise RuntimeError(f"could not build a cone passage pair for mu={mu}")
    return ConePair(mu, reverse, side, fronts["before"], fronts["after"])


# -- a front for the S'_K example -------------------------------------------

# cusp-free curve whose normal swings back and forth through about two turns;
# its middle double point has corrected split indices {2, -1}
_SK_POINTS = [
    (0, 0), (0, 1319), (-869, 2258), (-2053, 2368), (-2988, 1717), (-3336, 613),
    (-2988, -538), (-2098, -1364), (-988, -1706), (67, -1643), (961, -1346), (1728, -947),
    (2465, -512), (3284, -85), (4281, 247), (5473, 318), (6718, -66), (7696, -973),
    (8067, -2198), (7713, -3321), (6811, -3949), (5721, -3848), (4940, -3004),
    (4940, -1828), (5676, -1032), (6530, -953), (7004, -1283), (7115, -1636),
    (7021, -1945), (6692, -2250), (6030, -2454), (5059, -2396), (3907, -2013),
    (2697, -1383), (1496, -673), (339, -70), (-710, 279), (-1544, 329), (-2071, 167),
    (-2312, -57), (-2383, -293), (-2278, -626), (-1771, -979), (-824, -891),
]


def sk_example() -> Front:
    return Front.from_points(_SK_POINTS, (), RIGHT)
