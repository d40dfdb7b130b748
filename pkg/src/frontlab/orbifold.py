"""Fronts on an orbifold disk: the plane with cone points of order mu.

The first homology of the Seifert fibered space over the disk is generated
by the regular fiber f and one exceptional fiber f_a per cone point, with
f_a^mu = f.  The class of a lifted front with index ind and winding
numbers w_a around the cone points is f^(ind - sum w_a) * prod f_a^(w_a).
This reduces to f^ind when no cone is enclosed and gives f * f_a^(-k) for
a two-cusp lens turning k times clockwise around a cone.
"""
from __future__ import annotations

import string
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import FGAbelianGroup, GroupElement, GroupRingHalf, span_membership
from .front import (SPLIT_LABELING, SPLIT_LABELINGS, Cone, Front, _on_segment, _orient,
                    check, cusp_data, double_points, index, split_components,
                    to_fraction, winding_number)

VARIANTS = ("DEF", "BAR", "SIX")


class ConeOnFrontError(ValueError):
    pass


@dataclass(frozen=True)
class OrbifoldDisk:
    """Cone points, each of type (mu, -1)."""
    cones: tuple = ()

    def __post_init__(self):
        cones = tuple(c if isinstance(c, Cone) else
                      Cone(to_fraction(c[0][0]), to_fraction(c[0][1]), int(c[1]))
                      for c in self.cones)
        seen = set()
        for c in cones:
            if c.mu < 1:
                raise ValueError(f"cone order must be positive, got {c.mu}")
            if c.point in seen:
                raise ValueError(f"repeated cone point {c.point}")
            seen.add(c.point)
        object.__setattr__(self, "cones", cones)

    @classmethod
    def of_front(cls, front: Front) -> "OrbifoldDisk":
        return cls(front.cones)

    @property
    def names(self):
        return tuple(cone_name(k, len(self.cones)) for k in range(len(self.cones)))


def cone_name(k: int, total: int = 1) -> str:
    if total <= len(string.ascii_lowercase):
        return "f_" + string.ascii_lowercase[k]
    return f"f_a{k + 1}"


@lru_cache(maxsize=128)
def seifert_homology(o: OrbifoldDisk) -> FGAbelianGroup:
    names = ("f",) + o.names
    rels = []
    for k, c in enumerate(o.cones):
        row = [0] * len(names)
        row[0] = -1
        row[k + 1] = c.mu
        rels.append(tuple(row))
    return FGAbelianGroup(names, tuple(rels))


def _single_cone_group(mu: int) -> FGAbelianGroup:
    return seifert_homology(OrbifoldDisk((Cone(Fraction(0), Fraction(0), mu),)))


def _check_avoids(front: Front, o: OrbifoldDisk):
    pts = front.points
    n = len(pts)
    for c in o.cones:
        p = c.point
        for i in range(n):
            a, b = pts[i], pts[(i + 1) % n]
            if _orient(a, b, p) == 0 and _on_segment(a, b, p):
                raise ConeOnFrontError(f"front passes through the cone point {p}")


def windings(front: Front, o: OrbifoldDisk):
    _check_avoids(front, o)
    return tuple(winding_number(front, c.point) for c in o.cones)


def _class(group, names, f_exp, ws) -> GroupElement:
    exps = {"f": f_exp - sum(ws)}
    for name, w in zip(names, ws):
        exps[name] = w
    return group.element(exps)


def class_of_front(front: Front, o: OrbifoldDisk | None = None) -> GroupElement:
    o = OrbifoldDisk.of_front(front) if o is None else o
    ws = windings(front, o)
    return _class(seifert_homology(o), o.names, index(front), ws)


# -- relation generators ----------------------------------------------------


def n_sets(mu: int, nu: int = -1, variant: str = "DEF", flip_endpoint: bool = False):
    """Index sets (N1, N2) of k in 1..mu.

    N1 collects k whose angle 2 pi k nu / mu (mod 2 pi) lies in (0, pi],
    N2 those with angle in (0, pi).  BAR uses nu = 1.  SIX uses -k for N1
    and +k for N2 (with nu = -1 this is the same N1 as DEF).
    `flip_endpoint` makes the N1 interval [0, pi) instead (negative control).
    """
    if mu < 1:
        raise ValueError("mu must be positive")
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")

    def residues(k):
        if variant == "DEF":
            return (k * nu) % mu, (k * nu) % mu
        if variant == "BAR":
            return k % mu, k % mu
        return (-k) % mu, k % mu

    n1, n2 = set(), set()
    for k in range(1, mu + 1):
        r1, r2 = residues(k)
        # angle 2 pi r / mu compared with pi, exactly: 2r against mu
        if flip_endpoint:
            in1 = 0 <= 2 * r1 < mu
        else:
            in1 = 0 < 2 * r1 <= mu
        in2 = 0 < 2 * r2 < mu
        if in1:
            n1.add(k)
        if in2:
            n2.add(k)
    return frozenset(n1), frozenset(n2)


def r_generators_in(group: FGAbelianGroup, gen: str, mu: int, lam: GroupElement,
                    variant: str = "DEF", nu: int = -1, flip_endpoint: bool = False):
    """(R1, R2) for a cone of order mu with fiber generator `gen`."""
    n1, n2 = n_sets(mu, nu, variant, flip_endpoint)
    fa = group.generator(gen)

    def t(g, c=1):
        return GroupRingHalf.of(g, c)

    r1 = GroupRingHalf.zero(group)
    r2 = GroupRingHalf.zero(group)
    for k in range(1, mu + 1):
        a = fa ** (mu - k)
        b = fa ** k
        if variant == "BAR":
            a, b = b, a
        if k in n1:
            r1 = r1 + t(lam * a) - t(b)
            r2 = r2 + t(a) - t(lam * b)
        if k in n2:
            r1 = r1 - t(a) + t(lam * b)
            r2 = r2 - t(lam * a) + t(b)
    return r1, r2


def r_generators(o: OrbifoldDisk, a: int, lambda_class: GroupElement, variant: str = "DEF",
                 nu: int = -1, flip_endpoint: bool = False):
    group = seifert_homology(o)
    return r_generators_in(group, o.names[a], o.cones[a].mu, lambda_class, variant, nu,
                           flip_endpoint)


@dataclass(frozen=True)
class RConsistencyReport:
    cases: int
    discrepancies: tuple      # (mu, class label, generator) where DEF and BAR differ
    six_discrepancies: tuple  # same comparison for the SIX variant, reported as data

    @property
    def ok(self):
        return not self.discrepancies


def sample_classes(group: FGAbelianGroup):
    return (("e", group.identity()), ("f", group.generator("f")),
            ("f_a", group.generator("f_a")), ("f_a^2", group.generator("f_a") ** 2))


def verify_r_consistency(mu_max: int, flip_endpoint: bool = False) -> RConsistencyReport:
    """Compare the DEF generators (nu = -1) with the BAR ones for every mu up
    to mu_max and the sample classes e, f, f_a, f_a^2."""
    cases = 0
    bad, six = [], []
    for mu in range(1, mu_max + 1):
        g = _single_cone_group(mu)
        for label, lam in sample_classes(g):
            cases += 1
            d = r_generators_in(g, "f_a", mu, lam, "DEF", -1, flip_endpoint)
            b = r_generators_in(g, "f_a", mu, lam, "BAR")
            s = r_generators_in(g, "f_a", mu, lam, "SIX")
            for which in (0, 1):
                if d[which] != b[which]:
                    bad.append((mu, label, f"R{which + 1}"))
                if s[which] != b[which]:
                    six.append((mu, label, f"R{which + 1}"))
    return RConsistencyReport(cases, tuple(bad), tuple(six))


# -- S(lambda) in the quotient J --------------------------------------------


@dataclass(frozen=True)
class QuotientJ:
    """Half-integer group ring modulo the span of the halved R generators."""
    group: FGAbelianGroup
    lambda_class: GroupElement
    relations: tuple   # the elements R/2

    def equal(self, x, y) -> bool:
        return equal_in_J(x, y, self)

    def to_json(self):
        return [r.to_json() for r in self.relations]


def quotient_j(o: OrbifoldDisk, lam: GroupElement, variant: str = "DEF") -> QuotientJ:
    group = seifert_homology(o)
    rels = []
    for a in range(len(o.cones)):
        for r in r_generators(o, a, lam, variant):
            rels.append(r * Fraction(1, 2))
    return QuotientJ(group, lam, tuple(rels))


def equal_in_J(x: GroupRingHalf, y: GroupRingHalf, ctx: QuotientJ) -> bool:
    if x.group != ctx.group or y.group != ctx.group:
        raise ValueError("elements are not over the group of this quotient")
    return span_membership(x - y, ctx.relations)


def s_lambda_orbifold(front: Front, o: OrbifoldDisk | None = None,
                      labeling: str = SPLIT_LABELING, validate: bool = True):
    """Representative of S(lambda) and the quotient it lives in."""
    if labeling not in SPLIT_LABELINGS:
        raise ValueError(f"unknown labeling {labeling!r}")
    o = OrbifoldDisk.of_front(front) if o is None else o
    if validate:
        check(front)
    group = seifert_homology(o)
    lam = class_of_front(front, o)
    f = group.generator("f")
    e = group.identity()
    total = GroupRingHalf.zero(group)
    for dp in double_points(front):
        s = split_components(front, dp)
        first_plus = (s.first_turn > 0) == (labeling == "turn_left")
        plus, minus = (s.first, s.second) if first_plus else (s.second, s.first)
        eps = s.epsilon
        # the index correction is a pure power of f, the windings are geometric
        cp = _class(group, o.names, index(plus) + (1 - eps) // 2, windings(plus, o))
        cm = _class(group, o.names, index(minus) + (1 + eps) // 2, windings(minus, o))
        total = total + GroupRingHalf.of(cp) - GroupRingHalf.of(cm)
    cd = cusp_data(front)
    total = total + (GroupRingHalf.of(f) - GroupRingHalf.of(lam)) * cd.c_plus
    total = total + (GroupRingHalf.of(lam * f) - GroupRingHalf.of(e)) * cd.c_minus
    return total, quotient_j(o, lam)


def report(front: Front, labeling: str = SPLIT_LABELING) -> dict:
    """Structured summary used by the command line."""
    o = OrbifoldDisk.of_front(front)
    s, ctx = s_lambda_orbifold(front, o, labeling)
    group = ctx.group
    return {
        "group": group.describe(),
        "generators": list(group.generators),
        "cones": [{"x": str(c.x), "y": str(c.y), "mu": c.mu} for c in o.cones],
        "windings": list(windings(front, o)),
        "class": list(ctx.lambda_class.coords),
        "S_lambda": s.to_json(),
        "relations": ctx.to_json(),
    }
