"""Exact algebra: half-integer Laurent polynomials, quantum integers,
finitely generated abelian groups and half-integer group rings.

Half-integer coefficients are stored doubled, as plain ints.  Abelian
groups are put in canonical form with a Smith normal form from sympy.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_decomp


class HalfIntegerError(ValueError):
    pass


def _doubled(c) -> int:
    c = Fraction(c) * 2
    if c.denominator != 1:
        raise HalfIntegerError(f"{c / 2} is not a half-integer")
    return c.numerator


def format_half(d2: int) -> str:
    """Doubled value -> '3', '-1/2', ..."""
    if d2 % 2 == 0:
        return str(d2 // 2)
    return f"{d2}/2"


class LaurentHalf:
    """Laurent polynomial in one variable with half-integer coefficients."""

    __slots__ = ("_c", "var")

    def __init__(self, terms=None, var: str = "q"):
        self.var = var
        c = {}
        for e, v in (terms or {}).items():
            d = _doubled(v)
            if d:
                c[int(e)] = c.get(int(e), 0) + d
        self._c = {e: v for e, v in c.items() if v}

    @classmethod
    def _raw(cls, doubled: dict, var: str) -> "LaurentHalf":
        obj = cls.__new__(cls)
        obj.var = var
        obj._c = {e: v for e, v in doubled.items() if v}
        return obj

    @classmethod
    def monomial(cls, e: int, coeff=1, var: str = "q") -> "LaurentHalf":
        return cls({e: coeff}, var)

    @classmethod
    def zero(cls, var: str = "q") -> "LaurentHalf":
        return cls._raw({}, var)

    def with_var(self, var):
        return LaurentHalf._raw(dict(self._c), var)

    def coeff(self, e: int) -> Fraction:
        return Fraction(self._c.get(e, 0), 2)

    def terms(self):
        return [(e, Fraction(self._c[e], 2)) for e in sorted(self._c)]

    def doubled_terms(self):
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def is_integral(self) -> bool:
        return all(v % 2 == 0 for v in self._c.values())

    def degree(self):
        return max(self._c) if self._c else None

    def low_degree(self):
        return min(self._c) if self._c else None

    def _check(self, other):
        if not isinstance(other, LaurentHalf):
            return NotImplemented
        if other.var != self.var and self._c and other._c:
            raise ValueError(f"mixing variables {self.var} and {other.var}")
        return other

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentHalf({0: other}, self.var)
        if self._check(other) is NotImplemented:
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
        return LaurentHalf._raw(c, self.var if self._c else other.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentHalf._raw({e: -v for e, v in self._c.items()}, self.var)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentHalf({0: other}, self.var)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if isinstance(other, int):
                return LaurentHalf._raw({e: v * other for e, v in self._c.items()}, self.var)
            return LaurentHalf({e: Fraction(v, 2) * other for e, v in self._c.items()}, self.var)
        if self._check(other) is NotImplemented:
            return NotImplemented
        acc = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + v1 * v2
        # v1 * v2 is four times the product; halve back to doubled units
        out = {}
        for e, v in acc.items():
            if v % 2:
                raise HalfIntegerError("product leaves the half-integers")
            out[e] = v // 2
        return LaurentHalf._raw(out, self.var if self._c else other.var)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentHalf({0: other}, self.var)
        if not isinstance(other, LaurentHalf):
            return NotImplemented
        if self._c != other._c:
            return False
        return not self._c or self.var == other.var

    def __hash__(self):
        return hash((self.var, frozenset(self._c.items())))

    def evaluate(self, x) -> Fraction:
        x = Fraction(x)
        return sum((Fraction(v, 2) * x ** e for e, v in self._c.items()), Fraction(0))

    def at_one(self) -> Fraction:
        return Fraction(sum(self._c.values()), 2)

    def bar(self) -> "LaurentHalf":
        """Substitute the variable by its inverse."""
        return LaurentHalf._raw({-e: v for e, v in self._c.items()}, self.var)

    def is_symmetric(self) -> bool:
        return self == self.bar()

    def shift(self, k: int) -> "LaurentHalf":
        return LaurentHalf._raw({e + k: v for e, v in self._c.items()}, self.var)

    def to_json(self):
        return [[e, format_half(self._c[e])] for e in sorted(self._c)]

    def __repr__(self):
        return f"LaurentHalf({self!s})"

    def __str__(self):
        if not self._c:
            return "0"
        out = ""
        for e in sorted(self._c, reverse=True):
            v = Fraction(self._c[e], 2)
            neg = v < 0
            a = -v if neg else v
            if e == 0:
                body = format_rational(a)
            else:
                mono = self.var if e == 1 else f"{self.var}^{e}"
                body = mono if a == 1 else f"{format_rational(a)}{mono}"
            if not out:
                out = ("-" if neg else "") + body
            else:
                out += ("-" if neg else "+") + body
        return out


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


_TERM = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*(?:([A-Za-z_]\w*)(?:\^\(?(-?\d+)\)?)?)?")


def parse_laurent(text: str, var: str | None = None) -> LaurentHalf:
    """Parse sums like '1/2q^3 - q + 2' or 'f^-1 + e'.

    The letter 'e' stands for the constant 1 when the variable is not e.
    """
    s = text.replace(" ", "").replace("*", "")
    if not s:
        raise ValueError("empty polynomial")
    pos = 0
    terms = {}
    seen_var = var
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at {s[pos:]!r}")
        sgn, coef, name, exp = m.groups()
        if coef is None and name is None:
            raise ValueError(f"cannot parse polynomial at {s[pos:]!r}")
        if pos > 0 and not sgn:
            raise ValueError(f"missing operator before {s[pos:]!r}")
        c = Fraction(coef) if coef else Fraction(1)
        if sgn == "-":
            c = -c
        if name is None or (name == "e" and seen_var != "e"):
            if exp is not None:
                raise ValueError("exponent on a constant")
            e = 0
        else:
            if seen_var is None:
                seen_var = name
            elif name != seen_var:
                raise ValueError(f"mixed variables {seen_var} and {name}")
            e = int(exp) if exp is not None else 1
        terms[e] = terms.get(e, 0) + c
        pos = m.end()
    return LaurentHalf(terms, seen_var or "q")


# -- quantum integers -------------------------------------------------------

def quantum_number(n: int, var: str = "q") -> LaurentHalf:
    """[n] = (q^n - q^-n) / (q - q^-1)."""
    if n == 0:
        return LaurentHalf.zero(var)
    m = abs(n)
    s = 1 if n > 0 else -1
    return LaurentHalf._raw({e: 2 * s for e in range(1 - m, m, 2)}, var)


@dataclass(frozen=True)
class QuantumDecomposition:
    """P = sum of n_m [m] over the stored (m, n_m) pairs."""
    terms: tuple  # ((m, Fraction), ...) with m > 0 or m < 0, each |m| once

    def recompose(self, var: str = "q") -> LaurentHalf:
        out = LaurentHalf.zero(var)
        for m, c in self.terms:
            out = out + quantum_number(m, var) * c
        return out

    def as_dict(self):
        return dict(self.terms)


def quantum_decompose(p: LaurentHalf) -> QuantumDecomposition:
    """Write a symmetric P as sum of n_m [m] with n_m >= 0, taking the
    sign into m; the representation is unique."""
    if not p.is_symmetric():
        raise ValueError("only symmetric polynomials have a quantum decomposition")
    rest = p
    out = []
    while not rest.is_zero():
        d = rest.degree()
        c = rest.coeff(d)
        m = d + 1
        if c < 0:
            out.append((-m, -c))
        else:
            out.append((m, c))
        rest = rest - quantum_number(m, p.var) * c
    return QuantumDecomposition(tuple(sorted(out, key=lambda t: (abs(t[0]), t[0]))))


# -- finitely generated abelian groups --------------------------------------

@dataclass(frozen=True)
class FGAbelianGroup:
    """Abelian group on named generators modulo integer relations.

    Relations are rows of exponents, one entry per generator.  Elements are
    stored in canonical coordinates: the first coordinates are residues
    modulo the torsion orders, the rest are free.
    """
    generators: tuple
    relations: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relations", tuple(tuple(int(x) for x in r) for r in self.relations))
        for r in self.relations:
            if len(r) != len(self.generators):
                raise ValueError("relation length does not match the generators")

    @cached_property
    def _normal_form(self):
        n = len(self.generators)
        if self.relations:
            m = Matrix(list(self.relations))
            d, _, t = smith_normal_decomp(m, domain=ZZ)
            diag = [int(d[k, k]) for k in range(min(d.shape))]
        else:
            t = Matrix.eye(n)
            diag = []
        diag = [abs(x) for x in diag] + [0] * (n - len(diag))
        cols = [[int(t[i, k]) for i in range(n)] for k in range(n)]
        torsion = [k for k in range(n) if diag[k] > 1]
        free = [k for k in range(n) if diag[k] == 0]
        cols_kept = [cols[k] for k in torsion + free]
        ords = [diag[k] for k in torsion] + [0] * len(free)
        # choose signs of the free coordinates so the first generator with a
        # nonzero image is positive
        for pos in range(len(torsion), len(cols_kept)):
            col = cols_kept[pos]
            first = next((x for x in col if x), 0)
            if first < 0:
                cols_kept[pos] = [-x for x in col]
        return tuple(tuple(c) for c in cols_kept), tuple(ords)

    @property
    def orders(self):
        """Invariant factors of the kept coordinates, 0 meaning free."""
        return self._normal_form[1]

    @property
    def rank(self):
        return sum(1 for o in self.orders if o == 0)

    @property
    def torsion(self):
        return tuple(o for o in self.orders if o > 1)

    def describe(self) -> str:
        parts = [f"Z/{o}" for o in self.torsion] + ["Z"] * self.rank
        return " + ".join(parts) if parts else "0"

    def element(self, exponents) -> "GroupElement":
        """Element from generator exponents (dict by name or sequence)."""
        if isinstance(exponents, dict):
            unknown = set(exponents) - set(self.generators)
            if unknown:
                raise KeyError(f"unknown generators {sorted(unknown)}")
            vec = [int(exponents.get(g, 0)) for g in self.generators]
        else:
            vec = [int(x) for x in exponents]
        cols, ords = self._normal_form
        coords = []
        for col, o in zip(cols, ords):
            y = sum(a * b for a, b in zip(vec, col))
            coords.append(y % o if o else y)
        return GroupElement(tuple(coords), self)

    def generator(self, name: str) -> "GroupElement":
        return self.element({name: 1})

    def identity(self) -> "GroupElement":
        return GroupElement(tuple(0 for _ in self.orders), self)


def group_from_presentation(gens, relations=()) -> FGAbelianGroup:
    return FGAbelianGroup(tuple(gens), tuple(tuple(r) for r in relations))


@dataclass(frozen=True)
class GroupElement:
    coords: tuple
    group: FGAbelianGroup = field(compare=False, repr=False)

    def _reduce(self, coords):
        return tuple(c % o if o else c for c, o in zip(coords, self.group.orders))

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if other.group is not self.group and other.group != self.group:
            raise ValueError("elements of different groups")
        return GroupElement(self._reduce(tuple(a + b for a, b in zip(self.coords, other.coords))),
                            self.group)

    def __pow__(self, k: int) -> "GroupElement":
        return GroupElement(self._reduce(tuple(a * k for a in self.coords)), self.group)

    def inverse(self) -> "GroupElement":
        return self ** -1

    def is_identity(self) -> bool:
        return not any(self.coords)


class GroupRingHalf:
    """Finite sums of group elements with half-integer coefficients."""

    __slots__ = ("group", "_c")

    def __init__(self, group: FGAbelianGroup, terms=None):
        self.group = group
        c = {}
        for g, v in (terms or {}).items():
            if g.group != group:
                raise ValueError("element from a different group")
            d = _doubled(v)
            if d:
                c[g] = c.get(g, 0) + d
        self._c = {g: v for g, v in c.items() if v}

    @classmethod
    def _raw(cls, group, doubled):
        obj = cls.__new__(cls)
        obj.group = group
        obj._c = {g: v for g, v in doubled.items() if v}
        return obj

    @classmethod
    def of(cls, g: GroupElement, coeff=1) -> "GroupRingHalf":
        return cls(g.group, {g: coeff})

    @classmethod
    def zero(cls, group) -> "GroupRingHalf":
        return cls._raw(group, {})

    def doubled_terms(self):
        return dict(self._c)

    def terms(self):
        return [(g, Fraction(self._c[g], 2)) for g in sorted(self._c, key=lambda g: g.coords)]

    def coeff(self, g) -> Fraction:
        return Fraction(self._c.get(g, 0), 2)

    def is_zero(self):
        return not self._c

    def __add__(self, other):
        if not isinstance(other, GroupRingHalf):
            return NotImplemented
        if other.group != self.group:
            raise ValueError("group ring elements over different groups")
        c = dict(self._c)
        for g, v in other._c.items():
            c[g] = c.get(g, 0) + v
        return GroupRingHalf._raw(self.group, c)

    def __neg__(self):
        return GroupRingHalf._raw(self.group, {g: -v for g, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingHalf._raw(self.group, {g: v * other for g, v in self._c.items()})
        if isinstance(other, Fraction):
            return GroupRingHalf(self.group, {g: Fraction(v, 2) * other for g, v in self._c.items()})
        if isinstance(other, GroupElement):
            return GroupRingHalf._raw(self.group, {g * other: v for g, v in self._c.items()})
        if isinstance(other, GroupRingHalf):
            acc = {}
            for g1, v1 in self._c.items():
                for g2, v2 in other._c.items():
                    g = g1 * g2
                    acc[g] = acc.get(g, 0) + v1 * v2
            out = {}
            for g, v in acc.items():
                if v % 2:
                    raise HalfIntegerError("product leaves the half-integers")
                out[g] = v // 2
            return GroupRingHalf._raw(self.group, out)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, GroupRingHalf):
            return NotImplemented
        return self.group == other.group and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def to_json(self):
        return [[list(g.coords), format_half(v)] for g, v in
                sorted(self._c.items(), key=lambda t: t[0].coords)]

    def __repr__(self):
        body = " + ".join(f"{format_half(v)}*{list(g.coords)}" for g, v in
                          sorted(self._c.items(), key=lambda t: t[0].coords))
        return f"GroupRingHalf({body or '0'})"


def span_membership(x: GroupRingHalf, relations) -> bool:
    """Is x an integer combination of the given group ring elements?"""
    relations = list(relations)
    support = set(x.doubled_terms())
    for r in relations:
        support |= set(r.doubled_terms())
    if not support:
        return True
    keys = sorted(support, key=lambda g: g.coords)
    col = {g: k for k, g in enumerate(keys)}
    vec = [0] * len(keys)
    for g, v in x.doubled_terms().items():
        vec[col[g]] = v
    if not any(vec):
        return True
    rows = []
    for r in relations:
        row = [0] * len(keys)
        for g, v in r.doubled_terms().items():
            row[col[g]] = v
        if any(row):
            rows.append(row)
    if not rows:
        return False
    d, _, t = smith_normal_decomp(Matrix(rows), domain=ZZ)
    # x = y M  <=>  x T = z D for an integer row vector z
    xt = Matrix([vec]) * t
    diag = [int(d[k, k]) for k in range(min(d.shape))]
    for k in range(len(keys)):
        val = int(xt[0, k])
        dk = diag[k] if k < len(diag) else 0
        if dk == 0:
            if val != 0:
                return False
        elif val % dk:
            return False
    return True


def pr_map(x) -> Fraction:
    """Additive image of n_i g_i -> prod g_i^n_i for an infinite cyclic group:
    the sum of n_i times the exponent of g_i.

    Accepts a GroupRingHalf over a group isomorphic to Z, or a LaurentHalf.
    """
    if isinstance(x, LaurentHalf):
        return Fraction(sum(e * v for e, v in x.doubled_terms().items()), 2)
    g = x.group
    if g.orders != (0,):
        raise ValueError(f"group is {g.describe()}, not infinite cyclic")
    return Fraction(sum(k.coords[0] * v for k, v in x.doubled_terms().items()), 2)


def laurent_to_ring(p: LaurentHalf, group: FGAbelianGroup, gen: str = "f") -> GroupRingHalf:
    out = {}
    for e, v in p.doubled_terms().items():
        out[group.element({gen: e})] = out.get(group.element({gen: e}), 0) + v
    return GroupRingHalf._raw(group, out)
