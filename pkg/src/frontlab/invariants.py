"""Invariants of plane fronts built from smoothings of double points.

For a double point v with smoothings L+ and L- and product of branch signs
eps, the corrected indices are ind L~+ = ind L+ + (1 - eps)/2 and
ind L~- = ind L- + (1 + eps)/2.  Everything below is assembled from these
indices, the cusp counts C+ and C- and the index h of the front.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import LaurentHalf, quantum_decompose, quantum_number
from .front import (SPLIT_LABELING, SPLIT_LABELINGS, Front, check, cusp_data, double_points, index,
                    split_components)


@dataclass(frozen=True)
class SplitIndices:
    ind_plus: int
    ind_minus: int
    ind_tilde_plus: int
    ind_tilde_minus: int
    epsilon: int


@dataclass(frozen=True)
class _RawSplit:
    first: int       # index of the component starting along the first branch
    second: int
    first_turn: int  # turn sign of that component's junction
    epsilon: int

    def label(self, labeling):
        if labeling not in SPLIT_LABELINGS:
            raise ValueError(f"unknown labeling {labeling!r}")
        first_plus = (self.first_turn > 0) == (labeling == "turn_left")
        p, m = (self.first, self.second) if first_plus else (self.second, self.first)
        e = self.epsilon
        return SplitIndices(p, m, p + (1 - e) // 2, m + (1 + e) // 2, e)


@dataclass(frozen=True)
class FrontAnalysis:
    h: int
    c_plus: Fraction
    c_minus: Fraction
    splits: tuple  # SplitIndices per double point, in double point order


@lru_cache(maxsize=64)
def _raw_splits(front: Front):
    out = []
    for dp in double_points(front):
        s = split_components(front, dp)
        out.append(_RawSplit(index(s.first), index(s.second), s.first_turn, s.epsilon))
    return tuple(out)


def analyze(front: Front, labeling: str = SPLIT_LABELING, validate: bool = True) -> FrontAnalysis:
    if validate:
        check(front)
    cd = cusp_data(front)
    splits = tuple(r.label(labeling) for r in _raw_splits(front))
    return FrontAnalysis(index(front), cd.c_plus, cd.c_minus, splits)


def split_indices(front: Front, dp, labeling: str = SPLIT_LABELING) -> SplitIndices:
    s = split_components(front, dp)
    return _RawSplit(index(s.first), index(s.second), s.first_turn, s.epsilon).label(labeling)


def _an(x, labeling=SPLIT_LABELING) -> FrontAnalysis:
    return x if isinstance(x, FrontAnalysis) else analyze(x, labeling)


def s_integer(front, labeling: str = SPLIT_LABELING) -> int:
    a = _an(front, labeling)
    return sum(s.ind_plus - s.ind_minus - s.epsilon for s in a.splits)


def l_f_plane(front, labeling: str = SPLIT_LABELING) -> Fraction:
    a = _an(front, labeling)
    h = a.h
    return s_integer(a) + (1 - h) * a.c_plus + (h + 1) * a.c_minus


def bennequin(front, labeling: str = SPLIT_LABELING) -> int:
    a = _an(front, labeling)
    val = l_f_plane(a) + a.h * a.h
    if val.denominator != 1:
        raise ArithmeticError(f"Bennequin invariant came out non-integral: {val}")
    return int(val)


def lq(front, labeling: str = SPLIT_LABELING) -> LaurentHalf:
    a = _an(front, labeling)
    h = a.h
    out = LaurentHalf.zero("q")
    for s in a.splits:
        out = out + quantum_number(s.ind_plus - s.ind_minus - s.epsilon)
    out = out + quantum_number(1 - h) * a.c_plus + quantum_number(h + 1) * a.c_minus
    return out + quantum_number(h) * h


def s_lambda(front, labeling: str = SPLIT_LABELING) -> LaurentHalf:
    a = _an(front, labeling)
    h = a.h
    c = {}

    def add(e, v):
        c[e] = c.get(e, 0) + v

    for s in a.splits:
        add(s.ind_tilde_plus, 1)
        add(s.ind_tilde_minus, -1)
    out = LaurentHalf(c, "f")
    f, e, lam = (LaurentHalf.monomial(k, 1, "f") for k in (1, 0, h))
    cusp = (f - lam) * a.c_plus + (lam * f - e) * a.c_minus
    return out + cusp


def sk_polynomial(front, labeling: str = SPLIT_LABELING) -> LaurentHalf:
    """Sum of t^(ind L~+) - t^(ind L~-) over the double points whose corrected
    indices both avoid 0 and 1."""
    a = _an(front, labeling)
    c = {}
    for s in a.splits:
        if {s.ind_tilde_plus, s.ind_tilde_minus} & {0, 1}:
            continue
        c[s.ind_tilde_plus] = c.get(s.ind_tilde_plus, 0) + 1
        c[s.ind_tilde_minus] = c.get(s.ind_tilde_minus, 0) - 1
    return LaurentHalf(c, "t")


def to_lq(s: LaurentHalf, h: int) -> LaurentHalf:
    """l_q from S(lambda) and h: [h]h plus k_l [2l - h - 1] for every term
    k_l f^l of S with k_l > 0.

    Exact because S(lambda) of a front is antisymmetric under l -> h+1-l,
    so each pair of terms is counted once through its positive member.
    """
    out = quantum_number(h) * h
    for e, k in s.terms():
        if k > 0:
            out = out + quantum_number(2 * e - h - 1) * k
    return out


def to_s(lq_poly: LaurentHalf, h: int) -> LaurentHalf:
    """Inverse of to_lq on the image of fronts with index h."""
    rest = lq_poly - quantum_number(h) * h
    dec = quantum_decompose(rest)
    c = {}
    for m, k in dec.terms:
        if (m - h - 1) % 2:
            raise ValueError(f"[{m}] cannot occur for a front of index {h}")
        l = (m + h + 1) // 2
        c[l] = c.get(l, 0) + k
        c[h + 1 - l] = c.get(h + 1 - l, 0) - k
    return LaurentHalf(c, "f")


@dataclass(frozen=True)
class IdentityReport:
    failures: tuple

    @property
    def ok(self):
        return not self.failures


def check_split_identities(front, labeling: str = SPLIT_LABELING) -> IdentityReport:
    """ind L~+ + ind L~- = h + 1 at every double point, and the sums over
    double points of (ind L~+ - ind L~-) and (ind L+ - ind L- - eps) agree."""
    a = _an(front, labeling)
    bad = []
    for k, s in enumerate(a.splits):
        if s.ind_tilde_plus + s.ind_tilde_minus != a.h + 1:
            bad.append(f"double point {k}: corrected indices sum to "
                       f"{s.ind_tilde_plus + s.ind_tilde_minus}, expected {a.h + 1}")
        if s.ind_plus + s.ind_minus != a.h:
            bad.append(f"double point {k}: smoothing indices sum to {s.ind_plus + s.ind_minus}")
    lhs = sum(s.ind_tilde_plus - s.ind_tilde_minus for s in a.splits)
    rhs = sum(s.ind_plus - s.ind_minus - s.epsilon for s in a.splits)
    if lhs != rhs:
        bad.append(f"sum identity fails: {lhs} != {rhs}")
    return IdentityReport(tuple(bad))



def wall_type2(a: int, b: int) -> LaurentHalf:
    """(f - e)(f^a + f^b): the jump across a dangerous self-tangency whose
    two loops have indices a and b."""
    return LaurentHalf({1: 1, 0: -1}, "f") * LaurentHalf({a: 1}, "f") + \
        LaurentHalf({1: 1, 0: -1}, "f") * LaurentHalf({b: 1}, "f")


def wall_crossing_delta(before: Front, after: Front, loop_indices,
                        labeling: str = SPLIT_LABELING) -> LaurentHalf:
    """S(after) - S(before) for a dangerous self-tangency pair.

    Raises ValueError when the pair does not look like one: equal cusp
    counts and index, and double point counts differing by two.
    """
    if before.cusp_count != after.cusp_count:
        raise ValueError("not a wall-crossing pair: cusp counts differ")
    nb, na = len(double_points(before)), len(double_points(after))
    if abs(nb - na) != 2:
        raise ValueError("not a wall-crossing pair: double points must differ by two")
    if index(before) != index(after):
        raise ValueError("not a wall-crossing pair: indices differ")
    a, b = loop_indices
    if a + b != index(before):
        raise ValueError("loop indices must add up to the index of the front")
    return s_lambda(after, labeling) - s_lambda(before, labeling)
