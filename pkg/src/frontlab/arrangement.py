"""Planar arrangement of a front: vertices, double points and faces.

Each front edge is cut at its double points.  Faces are traced with the
usual half-edge rule (face on the left, turn to the next edge clockwise
from the twin).  The unbounded face is the one with negative signed area.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, cmp_to_key

from .front import (LEFT, Front, cross, double_points, dot, sub, to_fraction,
                    winding_number)

# Corner rule: a double-point corner counts towards V when the front's
# coorientation points into the region on both sides or out of it on both.
CORNER_RULES = ("same", "mixed")
CORNER_RULE = "same"


@dataclass(frozen=True)
class HalfEdge:
    origin: int
    dest: int
    edge: int       # front edge this piece lies on
    forward: bool   # same direction as the front


@dataclass(frozen=True)
class Corner:
    double_point: int
    into_in: bool   # coorientation of the incoming boundary piece points into the region
    into_out: bool


@dataclass(frozen=True)
class CuspIncidence:
    vertex: int
    kind: str  # "in": the cusp points into the region, "out": away from it


@dataclass(frozen=True)
class Region:
    id: int
    compact: bool
    half_edges: tuple
    boundary: tuple      # boundary points, region on the left
    corners: tuple
    cusps: tuple
    index: int           # winding number of the front around the region


@dataclass(frozen=True)
class RegionStats:
    chi: int
    c_in: int
    c_out: int
    v: int


def _half_plane(d):
    return 0 if (d[1] > 0 or (d[1] == 0 and d[0] > 0)) else 1


def _angle_cmp(a, b):
    ha, hb = _half_plane(a), _half_plane(b)
    if ha != hb:
        return ha - hb
    c = cross(a, b)
    return -1 if c > 0 else (1 if c < 0 else 0)


class Arrangement:
    """Face structure of a valid front."""

    def __init__(self, front: Front):
        self.front = front
        self.double_points = double_points(front)
        n = len(front.vertices)
        nodes = list(front.points)
        kinds = [("vertex", i) for i in range(n)]
        on_edge = defaultdict(list)
        for dp in self.double_points:
            node = len(nodes)
            nodes.append(dp.location)
            kinds.append(("double", dp.id))
            on_edge[dp.edge_a].append((dp.t_a, node))
            on_edge[dp.edge_b].append((dp.t_b, node))
        half = []
        for i in range(n):
            seq = [i] + [nd for _, nd in sorted(on_edge[i])] + [(i + 1) % n]
            for a, b in zip(seq, seq[1:]):
                half.append(HalfEdge(a, b, i, True))
                half.append(HalfEdge(b, a, i, False))
        self.nodes = nodes
        self.kinds = kinds
        self.half_edges = half
        outgoing = defaultdict(list)
        for h, he in enumerate(half):
            outgoing[he.origin].append(h)
        key = cmp_to_key(lambda g, h: _angle_cmp(self.direction(g), self.direction(h)))
        for node in outgoing:
            outgoing[node].sort(key=key)
        pos = {}
        for node, hs in outgoing.items():
            for k, h in enumerate(hs):
                pos[h] = k
        nxt = [0] * len(half)
        for h, he in enumerate(half):
            twin = h ^ 1
            ring = outgoing[he.dest]
            nxt[h] = ring[(pos[twin] - 1) % len(ring)]
        self.next = nxt
        self._trace()

    def direction(self, h):
        he = self.half_edges[h]
        return sub(self.nodes[he.dest], self.nodes[he.origin])

    def _trace(self):
        face_of = [-1] * len(self.half_edges)
        faces = []
        for start in range(len(self.half_edges)):
            if face_of[start] >= 0:
                continue
            cyc = []
            h = start
            while face_of[h] < 0:
                face_of[h] = len(faces)
                cyc.append(h)
                h = self.next[h]
            faces.append(tuple(cyc))
        self.face_of = face_of
        self.faces = faces
        areas = []
        for cyc in faces:
            pts = [self.nodes[self.half_edges[h].origin] for h in cyc]
            areas.append(sum(cross(pts[k], pts[(k + 1) % len(pts)]) for k in range(len(pts))))
        self.areas = areas
        outer = [k for k, a in enumerate(areas) if a < 0]
        if len(outer) != 1:
            raise ValueError("front arrangement is not connected")
        self.outer = outer[0]
        # winding numbers by walking across edges from the outer face
        wind = {self.outer: 0}
        stack = [self.outer]
        while stack:
            f = stack.pop()
            for h in faces[f]:
                g = self.face_of[h ^ 1]
                if g in wind:
                    continue
                # crossing from f to g across half-edge h^1 (g lies on its left)
                wind[g] = wind[f] + (1 if self.half_edges[h ^ 1].forward else -1)
                stack.append(g)
        self.face_winding = wind

    def into(self, h):
        """Does the coorientation of the piece under `h` point to its left face?"""
        he = self.half_edges[h]
        side = self.front.sides[he.edge]
        return (side == LEFT) == he.forward

    @cached_property
    def regions(self):
        order = sorted(range(len(self.faces)), key=self._face_key)
        out = []
        for rid, f in enumerate(order):
            out.append(self._region(rid, f))
        return tuple(out)

    def _face_key(self, f):
        # outer face first, then bounded faces by their lowest-leftmost boundary point
        if f == self.outer:
            return (0, ())
        pts = [self.nodes[self.half_edges[h].origin] for h in self.faces[f]]
        m = min(range(len(pts)), key=lambda k: pts[k])
        return (1, (pts[m], pts[(m + 1) % len(pts)]))

    def _region(self, rid, f):
        cyc = self.faces[f]
        corners = []
        cusps = []
        for k, h in enumerate(cyc):
            g = cyc[(k + 1) % len(cyc)]
            node = self.half_edges[h].dest
            kind, ref = self.kinds[node]
            if kind == "double":
                corners.append(Corner(ref, self.into(h), self.into(g)))
            elif self.front.vertices[ref].cusp:
                a, b = self.direction(h), self.direction(g)
                # a sharp left turn leaves the thin sector inside the region
                cusps.append(CuspIncidence(ref, "out" if cross(a, b) > 0 else "in"))
        boundary = tuple(self.nodes[self.half_edges[h].origin] for h in cyc)
        return Region(rid, f != self.outer, cyc, boundary, tuple(corners), tuple(cusps),
                      self.face_winding[f])

    def sample_point(self, region: Region):
        """A point strictly inside the region."""
        if not region.compact:
            xs = [p[0] for p in self.nodes]
            ys = [p[1] for p in self.nodes]
            return (max(xs) + 1, max(ys) + 1)
        h = region.half_edges[0]
        he = self.half_edges[h]
        a, b = self.nodes[he.origin], self.nodes[he.dest]
        m = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
        d = sub(b, a)
        ell = (-d[1], d[0])
        best = None
        for k, other in enumerate(self.half_edges):
            if k % 2 or k == (h & ~1):
                continue
            p, q = self.nodes[other.origin], self.nodes[other.dest]
            s = sub(q, p)
            den = cross(ell, s)
            if den == 0:
                continue
            mp = sub(p, m)
            t = Fraction(cross(mp, s), den)
            u = Fraction(cross(mp, ell), den)
            if t > 0 and 0 <= u <= 1 and (best is None or t < best):
                best = t
        t = best / 2
        return (m[0] + t * ell[0], m[1] + t * ell[1])


def regions(front: Front):
    return Arrangement(front).regions


def region_stats(region: Region, corner_rule: str = CORNER_RULE) -> RegionStats:
    if corner_rule not in CORNER_RULES:
        raise ValueError(f"unknown corner rule {corner_rule!r}")
    same = sum(1 for c in region.corners if c.into_in == c.into_out)
    v = same if corner_rule == "same" else len(region.corners) - same
    c_in = sum(1 for c in region.cusps if c.kind == "in")
    c_out = sum(1 for c in region.cusps if c.kind == "out")
    return RegionStats(1 if region.compact else 0, c_in, c_out, v)


def region_index(front: Front, region: Region, arrangement: Arrangement | None = None) -> int:
    """Winding number of the front around an interior point of the region."""
    arr = arrangement or Arrangement(front)
    return winding_number(front, arr.sample_point(region))


def locate(arrangement: Arrangement, p) -> Region:
    """Region containing point p (p must not lie on the front)."""
    p = (to_fraction(p[0]), to_fraction(p[1]))
    from .front import polygon_winding
    for r in arrangement.regions:
        if not r.compact:
            continue
        if polygon_winding(r.boundary, p) == 1:
            return r
    return arrangement.regions[0]
