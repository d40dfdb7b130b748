"""Exact piecewise-linear model of oriented, cooriented plane fronts.

A front is a closed polygon.  Each vertex is either regular or a cusp, and
the coorienting normal of every edge is the tangent rotated by +90 degrees
(side LEFT) or -90 degrees (side RIGHT).  The side of edge 0 is the seed;
it flips at every cusp vertex.

All coordinates are Fractions and every predicate is an exact sign test.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Iterable, Sequence

LEFT = "LEFT"
RIGHT = "RIGHT"
SIDES = (LEFT, RIGHT)

Point = tuple  # (Fraction, Fraction)


class FrontParseError(ValueError):
    """Malformed FRONT text, with a 1-based line and column."""

    def __init__(self, message, line=0, column=0):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.reason = message


class InvalidFrontError(ValueError):
    def __init__(self, report):
        super().__init__("; ".join(v.message for v in report.violations))
        self.report = report


# -- exact vector helpers ---------------------------------------------------

def sub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def dot(a, b):
    return a[0] * b[0] + a[1] * b[1]


def rot_left(d):
    return (-d[1], d[0])


def rot_right(d):
    return (d[1], -d[0])


def normal(d, side):
    return rot_left(d) if side == LEFT else rot_right(d)


def flip(side):
    return RIGHT if side == LEFT else LEFT


def sign(x):
    return (x > 0) - (x < 0)


def polygon_winding(poly, p):
    """Winding number of the closed polygon `poly` around `p` (exact)."""
    px, py = p
    w = 0
    n = len(poly)
    for k in range(n):
        ax, ay = poly[k]
        bx, by = poly[(k + 1) % n]
        if ay <= py:
            if by > py and (bx - ax) * (py - ay) - (px - ax) * (by - ay) > 0:
                w += 1
        elif by <= py and (bx - ax) * (py - ay) - (px - ax) * (by - ay) < 0:
            w -= 1
    return w


def to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"not an exact rational: {value!r}")


_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


def parse_rational(token: str) -> Fraction:
    if not _RATIONAL.match(token):
        raise ValueError(f"not a rational: {token!r}")
    value = Fraction(token)
    if "/" in token and int(token.split("/")[1]) == 0:
        raise ValueError("zero denominator")
    return value


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# -- data model -------------------------------------------------------------

@dataclass(frozen=True)
class Vertex:
    x: Fraction
    y: Fraction
    cusp: bool = False

    @property
    def point(self):
        return (self.x, self.y)


@dataclass(frozen=True)
class Cone:
    """A cone point of order mu in the base of an orbifold bundle."""
    x: Fraction
    y: Fraction
    mu: int

    @property
    def point(self):
        return (self.x, self.y)


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    where: tuple = ()


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple

    @property
    def ok(self):
        return not self.violations

    def codes(self):
        return sorted({v.code for v in self.violations})


@dataclass(frozen=True)
class CuspInfo:
    vertex: int
    sign: int


@dataclass(frozen=True)
class CuspData:
    cusps: tuple
    c_plus: Fraction
    c_minus: Fraction


@dataclass(frozen=True)
class DoublePoint:
    """A transverse self-intersection.

    `edge_a` is the edge visited first along the traversal that starts at
    vertex 0, `edge_b` the second; `t_a`, `t_b` are the edge parameters.
    """
    id: int
    location: tuple
    edge_a: int
    edge_b: int
    t_a: Fraction
    t_b: Fraction
    side_a: str
    side_b: str

    @property
    def branch_signs(self):
        return (1 if self.side_a == RIGHT else -1, 1 if self.side_b == RIGHT else -1)

    @property
    def epsilon(self):
        a, b = self.branch_signs
        return a * b


@dataclass(frozen=True)
class Front:
    vertices: tuple
    seed: str = LEFT
    cones: tuple = ()

    def __post_init__(self):
        if self.seed not in SIDES:
            raise ValueError(f"seed must be LEFT or RIGHT, got {self.seed!r}")

    @classmethod
    def from_points(cls, points, cusps=(), seed=LEFT, cones=()):
        """Build from coordinate pairs; `cusps` lists cusp vertex indices."""
        cusps = set(cusps)
        verts = tuple(
            Vertex(to_fraction(x), to_fraction(y), i in cusps)
            for i, (x, y) in enumerate(points)
        )
        return cls(verts, seed, tuple(cones))

    @classmethod
    def from_edge_sides(cls, points, sides, cones=()):
        """Build from points and per-edge sides; cusp flags are derived.

        A vertex is flagged iff the sides of its two edges differ.
        """
        n = len(points)
        cusps = [k for k in range(n) if sides[k - 1] != sides[k]]
        return cls.from_points(points, cusps, sides[0], cones)

    def __len__(self):
        return len(self.vertices)

    @cached_property
    def points(self):
        return tuple(v.point for v in self.vertices)

    @cached_property
    def sides(self):
        out = [self.seed]
        for k in range(1, len(self.vertices)):
            out.append(flip(out[-1]) if self.vertices[k].cusp else out[-1])
        return tuple(out)

    def edge(self, i):
        n = len(self.vertices)
        return self.points[i], self.points[(i + 1) % n]

    def edge_vector(self, i):
        a, b = self.edge(i)
        return sub(b, a)

    @cached_property
    def edge_vectors(self):
        n = len(self.vertices)
        p = self.points
        return tuple(sub(p[(i + 1) % n], p[i]) for i in range(n))

    @cached_property
    def normals(self):
        return tuple(normal(d, s) for d, s in zip(self.edge_vectors, self.sides))

    @property
    def cusp_count(self):
        return sum(v.cusp for v in self.vertices)

    def rotated_start(self, k):
        """Same front, traversal starting at vertex k (seed adjusted)."""
        n = len(self.vertices)
        k %= n
        verts = self.vertices[k:] + self.vertices[:k]
        return Front(verts, self.sides[k], self.cones)

    def reversed(self):
        """Opposite orientation, same coorientation."""
        n = len(self.vertices)
        # new edge i runs backwards along old edge n-2-i, so its side flips
        verts = tuple(reversed(self.vertices))
        seed = flip(self.sides[n - 2])
        return Front(verts, seed, self.cones)

    def coorientation_flipped(self):
        return Front(self.vertices, flip(self.seed), self.cones)

    def with_cones(self, cones):
        return Front(self.vertices, self.seed, tuple(cones))

    @cached_property
    def _int_scale(self):
        den = 1
        for v in self.vertices:
            den = lcm(den, v.x.denominator, v.y.denominator)
        return den

    @cached_property
    def _int_points(self):
        s = self._int_scale
        return tuple((int(v.x * s), int(v.y * s)) for v in self.vertices)


# -- text format ------------------------------------------------------------

def parse(text: str) -> Front:
    """Parse FRONT v1 text (str or UTF-8 bytes)."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise FrontParseError("input is not UTF-8 text", 1, exc.start + 1) from None
    verts = []
    seed = None
    cones = []
    header_seen = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        tokens = line.split()
        col = line.index(tokens[0]) + 1
        if not header_seen:
            if tokens[0] != "FRONT":
                raise FrontParseError("expected header 'FRONT 1'", lineno, col)
            if len(tokens) != 2:
                raise FrontParseError("malformed header", lineno, col)
            if tokens[1] != "1":
                raise FrontParseError(f"unsupported version {tokens[1]}", lineno,
                                      line.index(tokens[1], col) + 1)
            header_seen = True
            continue
        head = tokens[0]
        if head == "V":
            if len(tokens) not in (3, 4) or (len(tokens) == 4 and tokens[3] != "CUSP"):
                raise FrontParseError("expected 'V <x> <y> [CUSP]'", lineno, col)
            x = _rational_token(tokens[1], line, lineno)
            y = _rational_token(tokens[2], line, lineno)
            verts.append(Vertex(x, y, len(tokens) == 4))
        elif head == "SEED":
            if seed is not None:
                raise FrontParseError("SEED given more than once", lineno, col)
            if len(tokens) != 2 or tokens[1] not in SIDES:
                raise FrontParseError("expected 'SEED LEFT|RIGHT'", lineno, col)
            seed = tokens[1]
        elif head == "CONE":
            if len(tokens) != 4:
                raise FrontParseError("expected 'CONE <x> <y> <mu>'", lineno, col)
            x = _rational_token(tokens[1], line, lineno)
            y = _rational_token(tokens[2], line, lineno)
            if not re.match(r"^\d+$", tokens[3]) or int(tokens[3]) < 1:
                raise FrontParseError("cone order must be a positive integer", lineno,
                                      line.index(tokens[3]) + 1)
            cones.append(Cone(x, y, int(tokens[3])))
        elif head == "FRONT":
            raise FrontParseError("duplicate header", lineno, col)
        else:
            raise FrontParseError(f"unknown record {head!r}", lineno, col)
    if not header_seen:
        raise FrontParseError("missing header 'FRONT 1'", 1, 1)
    if seed is None:
        raise FrontParseError("missing SEED line", len(text.splitlines()) or 1, 1)
    if len(verts) < 3:
        raise FrontParseError("a front needs at least 3 vertices", len(text.splitlines()), 1)
    return Front(tuple(verts), seed, tuple(cones))


def _rational_token(tok, line, lineno):
    try:
        return parse_rational(tok)
    except ValueError as exc:
        raise FrontParseError(str(exc), lineno, line.index(tok) + 1) from None


def serialize(front: Front) -> str:
    lines = ["FRONT 1"]
    for v in front.vertices:
        s = f"V {format_rational(v.x)} {format_rational(v.y)}"
        lines.append(s + " CUSP" if v.cusp else s)
    lines.append(f"SEED {front.seed}")
    for c in front.cones:
        lines.append(f"CONE {format_rational(c.x)} {format_rational(c.y)} {c.mu}")
    return "\n".join(lines) + "\n"


parse_front = parse


def serialize_front(front: Front) -> bytes:
    return serialize(front).encode("utf-8")


def to_dict(front: Front) -> dict:
    return {
        "version": 1,
        "vertices": [
            {"x": format_rational(v.x), "y": format_rational(v.y), "cusp": v.cusp}
            for v in front.vertices
        ],
        "seed": front.seed,
        "cones": [
            {"x": format_rational(c.x), "y": format_rational(c.y), "mu": c.mu}
            for c in front.cones
        ],
    }


def from_dict(data: dict) -> Front:
    if data.get("version") != 1:
        raise FrontParseError(f"unsupported version {data.get('version')!r}")
    try:
        verts = tuple(
            Vertex(to_fraction(str(v["x"])), to_fraction(str(v["y"])), bool(v.get("cusp", False)))
            for v in data["vertices"]
        )
        cones = tuple(
            Cone(to_fraction(str(c["x"])), to_fraction(str(c["y"])), int(c["mu"]))
            for c in data.get("cones", [])
        )
        seed = data["seed"]
    except (KeyError, TypeError, ValueError) as exc:
        raise FrontParseError(f"bad front record: {exc}") from None
    if seed not in SIDES:
        raise FrontParseError(f"bad seed {seed!r}")
    if len(verts) < 3:
        raise FrontParseError("a front needs at least 3 vertices")
    return Front(verts, seed, cones)


# -- segment predicates -----------------------------------------------------

def _orient(a, b, c):
    return sign((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]))


def _on_segment(a, b, p):
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def segment_relation(a, b, c, d):
    """Classify segments ab, cd: None, 'cross', 'touch' or 'overlap'."""
    o1 = _orient(a, b, c)
    o2 = _orient(a, b, d)
    o3 = _orient(c, d, a)
    o4 = _orient(c, d, b)
    if o1 == o2 == 0:
        # collinear: overlap only if the 1D extents share more than a point
        if not (_on_segment(a, b, c) or _on_segment(a, b, d)
                or _on_segment(c, d, a) or _on_segment(c, d, b)):
            return None
        pts = sorted([a, b]), sorted([c, d])
        lo = max(pts[0][0], pts[1][0])
        hi = min(pts[0][1], pts[1][1])
        return "overlap" if lo != hi else "touch"
    if o1 * o2 < 0 and o3 * o4 < 0:
        return "cross"
    if (o1 == 0 and _on_segment(a, b, c)) or (o2 == 0 and _on_segment(a, b, d)) \
            or (o3 == 0 and _on_segment(c, d, a)) or (o4 == 0 and _on_segment(c, d, b)):
        return "touch"
    return None


def _candidate_pairs(pts):
    """Edge pairs (i, j), i < j, whose bounding boxes meet."""
    n = len(pts)
    boxes = []
    for i in range(n):
        (ax, ay), (bx, by) = pts[i], pts[(i + 1) % n]
        boxes.append((min(ax, bx), max(ax, bx), min(ay, by), max(ay, by)))
    order = sorted(range(n), key=lambda i: boxes[i][0])
    for pos, i in enumerate(order):
        x0, x1, y0, y1 = boxes[i]
        for j in order[pos + 1:]:
            bj = boxes[j]
            if bj[0] > x1:
                break
            if bj[2] <= y1 and bj[3] >= y0:
                yield (i, j) if i < j else (j, i)


def _adjacent(i, j, n):
    return j == i + 1 or (i == 0 and j == n - 1)


# -- validation -------------------------------------------------------------

def validate(front: Front, relaxed: bool = False) -> ValidationReport:
    """Check the representation invariants; `relaxed` allows any regular turn
    short of a reversal and treats cusp flags as bare side flips."""
    out = []
    verts = front.vertices
    n = len(verts)
    if n < 3:
        return ValidationReport((Violation("too-few-vertices", "fewer than 3 vertices"),))
    pts = front._int_points
    for k in range(n):
        if pts[k] == pts[(k + 1) % n]:
            out.append(Violation("repeated-vertex", f"vertices {k} and {(k + 1) % n} coincide", (k,)))
    if out:
        return ValidationReport(tuple(out))
    if front.cusp_count % 2:
        out.append(Violation("odd-cusps", f"odd number of cusps ({front.cusp_count})"))
    for k in range(n):
        d_in = sub(pts[k], pts[k - 1])
        d_out = sub(pts[(k + 1) % n], pts[k])
        c, dt = cross(d_in, d_out), dot(d_in, d_out)
        if verts[k].cusp:
            if c == 0:
                out.append(Violation("degenerate-cusp", f"vertex {k}: cusp with no residual turn", (k,)))
            elif dt >= 0 and not relaxed:
                out.append(Violation("bad-cusp", f"vertex {k}: cusp does not fold back", (k,)))
        else:
            if c == 0 and dt < 0:
                out.append(Violation("reversal", f"vertex {k}: regular vertex reverses direction", (k,)))
            elif dt <= 0 and not relaxed:
                out.append(Violation("sharp-turn", f"vertex {k}: regular turn not inside (-pi/2, pi/2)", (k,)))
    # normals of consecutive edges must not be antiparallel
    nrm = [normal(sub(pts[(i + 1) % n], pts[i]), s) for i, s in enumerate(front.sides)]
    for k in range(n):
        a, b = nrm[k - 1], nrm[k]
        if cross(a, b) == 0 and dot(a, b) < 0:
            out.append(Violation("normal-reversal", f"vertex {k}: normal turns by pi", (k,)))
    seen = {}
    for i, j in _candidate_pairs(pts):
        a, b = pts[i], pts[(i + 1) % n]
        c, d = pts[j], pts[(j + 1) % n]
        if _adjacent(i, j, n):
            # covered by the per-vertex reversal checks
            continue
        rel = segment_relation(a, b, c, d)
        if rel is None:
            continue
        if rel == "overlap":
            out.append(Violation("overlap", f"edges {i} and {j} overlap", (i, j)))
        elif rel == "touch":
            out.append(Violation("vertex-on-edge", f"edges {i} and {j} touch at a vertex", (i, j)))
        else:
            p = _intersection(a, b, c, d)
            if p in seen:
                out.append(Violation("triple-point", f"three branches meet at edges {seen[p]} and {(i, j)}", (i, j)))
            else:
                seen[p] = (i, j)
    return ValidationReport(tuple(out))


def check(front: Front, relaxed: bool = False) -> Front:
    rep = validate(front, relaxed)
    if not rep.ok:
        raise InvalidFrontError(rep)
    return front


def _intersection(a, b, c, d):
    r = sub(b, a)
    s = sub(d, c)
    den = cross(r, s)
    t = Fraction(cross(sub(c, a), s), den)
    return (a[0] + t * r[0], a[1] + t * r[1])


def _params(a, b, c, d):
    r = sub(b, a)
    s = sub(d, c)
    den = cross(r, s)
    ca = sub(c, a)
    return Fraction(cross(ca, s), den), Fraction(cross(ca, r), den)


# -- invariants of the curve itself -----------------------------------------

def index(front: Front) -> int:
    """Total turning of the coorienting normal, in full turns.

    Each vertex contributes the signed angle in (-pi, pi) between the normals
    of its two edges, so the sum is the winding number of the closed polygon
    of normal vectors around the origin.
    """
    nrm = front.normals
    n = len(nrm)
    for k in range(n):
        a, b = nrm[k - 1], nrm[k]
        if cross(a, b) == 0 and dot(a, b) < 0:
            raise InvalidFrontError(ValidationReport(
                (Violation("normal-reversal", f"vertex {k}: normal turns by pi", (k,)),)))
    return polygon_winding(nrm, (0, 0))


def vertex_turn_signs(front: Front):
    """Sign of the normal turn at every vertex."""
    nrm = front.normals
    return tuple(sign(cross(nrm[k - 1], nrm[k])) for k in range(len(nrm)))


def cusp_data(front: Front) -> CuspData:
    """Cusp signs: +1 when the residual normal turn at the cusp is
    counterclockwise."""
    nrm = front.normals
    infos = []
    for k, v in enumerate(front.vertices):
        if v.cusp:
            infos.append(CuspInfo(k, sign(cross(nrm[k - 1], nrm[k]))))
    plus = sum(1 for c in infos if c.sign > 0)
    minus = sum(1 for c in infos if c.sign < 0)
    return CuspData(tuple(infos), Fraction(plus, 2), Fraction(minus, 2))


def double_points(front: Front):
    """All transverse self-intersections, sorted by location."""
    pts = front._int_points
    scale = front._int_scale
    n = len(pts)
    sides = front.sides
    found = []
    for i, j in _candidate_pairs(pts):
        if _adjacent(i, j, n):
            continue
        a, b = pts[i], pts[(i + 1) % n]
        c, d = pts[j], pts[(j + 1) % n]
        if segment_relation(a, b, c, d) != "cross":
            continue
        t, u = _params(a, b, c, d)
        p = _intersection(a, b, c, d)
        loc = (p[0] / scale, p[1] / scale)
        found.append((loc, i, j, t, u))
    found.sort(key=lambda r: r[0])
    return tuple(
        DoublePoint(k, loc, i, j, t, u, sides[i], sides[j])
        for k, (loc, i, j, t, u) in enumerate(found)
    )


def winding_number(front: Front, p, direction=None) -> int:
    """Winding number of the front around p.

    With `direction`, crossings are counted along the ray from p in that
    direction after an exact change of frame; the answer is the same for
    every ray, which is what the property tests check.
    """
    p = (to_fraction(p[0]), to_fraction(p[1]))
    pts = front.points
    if direction is None:
        return polygon_winding(pts, p)
    d = (to_fraction(direction[0]), to_fraction(direction[1]))
    if d == (0, 0):
        raise ValueError("ray direction must be nonzero")
    # frame where the ray is the positive first axis (orientation preserving)
    moved = [(dot(sub(q, p), d), cross(d, sub(q, p))) for q in pts]
    return polygon_winding(moved, (0, 0))


# -- smoothing at a double point --------------------------------------------

SPLIT_LABELINGS = ("turn_left", "turn_right")
# Calibrated default: the component whose junction turns left is L+.
SPLIT_LABELING = "turn_left"


@dataclass(frozen=True)
class Split:
    """The two fronts obtained by smoothing a double point."""
    first: Front   # starts along edge_a, returns along edge_b
    second: Front  # starts along edge_b, returns along edge_a
    first_turn: int  # sign of the tangent turn at the junction of `first`
    epsilon: int


def split_components(front: Front, dp: DoublePoint) -> Split:
    n = len(front.vertices)
    i, j = dp.edge_a, dp.edge_b
    v = Vertex(dp.location[0], dp.location[1], dp.side_a != dp.side_b)
    verts = front.vertices
    a = (v,) + verts[i + 1:j + 1]
    b = (v,) + verts[j + 1:] + verts[:i + 1]
    first = Front(a, dp.side_a, front.cones)
    second = Front(b, dp.side_b, front.cones)
    turn = sign(cross(front.edge_vectors[j], front.edge_vectors[i]))
    return Split(first, second, turn, dp.epsilon)


def smooth_split(front: Front, dp: DoublePoint, labeling: str = SPLIT_LABELING):
    """Return (L+, L-) for the double point under the given labeling rule.

    The junction vertex carries a cusp flag when the two branches have
    opposite sides, which keeps the side bookkeeping consistent.
    """
    if labeling not in SPLIT_LABELINGS:
        raise ValueError(f"unknown labeling {labeling!r}")
    s = split_components(front, dp)
    first_is_plus = (s.first_turn > 0) == (labeling == "turn_left")
    return (s.first, s.second) if first_is_plus else (s.second, s.first)


def translate(front: Front, dx, dy) -> Front:
    dx, dy = to_fraction(dx), to_fraction(dy)
    verts = tuple(Vertex(v.x + dx, v.y + dy, v.cusp) for v in front.vertices)
    cones = tuple(Cone(c.x + dx, c.y + dy, c.mu) for c in front.cones)
    return Front(verts, front.seed, cones)


def scaled(front: Front, k) -> Front:
    k = to_fraction(k)
    verts = tuple(Vertex(v.x * k, v.y * k, v.cusp) for v in front.vertices)
    cones = tuple(Cone(c.x * k, c.y * k, c.mu) for c in front.cones)
    return Front(verts, front.seed, cones)


def points_of(seq: Iterable[Sequence]) -> list:
    return [(to_fraction(x), to_fraction(y)) for x, y in seq]
