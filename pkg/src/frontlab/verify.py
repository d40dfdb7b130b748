"""Executable acceptance suites.

Each check returns a Report; suites bundle checks.  Everything is
deterministic for a given seed, and every failure carries a command line
that regenerates the offending fixture.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import fixtures as fx
from .algebra import (LaurentHalf, laurent_to_ring, pr_map, quantum_decompose,
                      quantum_number)
from .arrangement import CORNER_RULE, CORNER_RULES
from .front import SPLIT_LABELING, SPLIT_LABELINGS, LEFT, RIGHT, double_points, index
from .invariants import (analyze, bennequin, check_split_identities, l_f_plane, lq,
                         s_lambda, sk_polynomial, to_lq, to_s, wall_crossing_delta,
                         wall_type2)
from .orbifold import (OrbifoldDisk, equal_in_J, s_lambda_orbifold, seifert_homology,
                       verify_r_consistency)
from .shadow import parity_check, shadow_of_front, sigma_value

SUITES = ("moves", "identities", "wall", "orbifold", "quantum", "calibration", "all")


@dataclass
class Failure:
    case: str
    message: str
    repro: str = ""

    def to_dict(self):
        return {"case": self.case, "message": self.message, "repro": self.repro}


@dataclass
class Report:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def ok(self):
        return not self.failures

    def fail(self, case, message, repro=""):
        self.failures.append(Failure(case, message, repro))

    def to_dict(self):
        return {"name": self.name, "cases": self.cases, "ok": self.ok,
                "failures": [f.to_dict() for f in self.failures], "notes": self.notes}


def _corpus_repro(seed, name):
    if name.startswith("random-"):
        k = name.rsplit("-", 1)[1]
        return f"frontlab fixtures random --seed {seed} --instance {k}"
    return f"frontlab fixtures {name}"


# -- A1 -----------------------------------------------------------------------

MOVE_FAMILIES = tuple(fx.FAMILIES)


def _move_values(front, labeling):
    a = analyze(front, labeling)
    return {"l": bennequin(a), "l_q": lq(a), "S_lambda": s_lambda(a),
            "l_F": l_f_plane(a), "S_prime_K": sk_polynomial(a)}


def check_moves(seed: int = 0, count: int = 20, labeling: str = SPLIT_LABELING,
                families=MOVE_FAMILIES) -> Report:
    rep = Report("A1 move invariance")
    for fam in families:
        for i in range(count):
            repro = f"frontlab fixtures {fam} --seed {seed} --instance {i}"
            case = f"{fam}#{i}"
            try:
                pair = fx.move_pair(fam, seed, i)
            except RuntimeError as exc:
                rep.fail(case, str(exc), repro)
                continue
            rep.cases += 1
            before = _move_values(pair.before, labeling)
            after = _move_values(pair.after, labeling)
            for key in before:
                if before[key] != after[key]:
                    rep.fail(case, f"{key} changed: {before[key]} -> {after[key]}", repro)
    rep.notes["families"] = len(families)
    rep.notes["labeling"] = labeling
    return rep


# -- A2 to A6 -------------------------------------------------------------------


def check_sigma(corpus, seed=0, corner_rule: str = CORNER_RULE, tamper: bool = False) -> Report:
    rep = Report("A2 sigma equals index")
    for name, f in corpus:
        rep.cases += 1
        s = sigma_value(shadow_of_front(f, corner_rule, tamper))
        if s != index(f):
            rep.fail(name, f"sigma {s} != index {index(f)}", _corpus_repro(seed, name))
    return rep


def check_parity(corpus, seed=0, corner_rule: str = CORNER_RULE, tamper: bool = False) -> Report:
    rep = Report("A3 gleam parity")
    for name, f in corpus:
        rep.cases += 1
        if not parity_check(shadow_of_front(f, corner_rule, tamper)):
            rep.fail(name, "a gleam has the wrong parity", _corpus_repro(seed, name))
    return rep


def check_split(corpus, seed=0, labeling: str = SPLIT_LABELING) -> Report:
    rep = Report("A4 split identities")
    for name, f in corpus:
        rep.cases += 1
        r = check_split_identities(f, labeling)
        for msg in r.failures:
            rep.fail(name, msg, _corpus_repro(seed, name))
    return rep


def check_splitting(corpus, seed=0, labeling: str = SPLIT_LABELING) -> Report:
    rep = Report("A5 pr(S) equals l_F")
    for name, f in corpus:
        rep.cases += 1
        a = analyze(f, labeling)
        lhs, rhs = pr_map(s_lambda(a)), l_f_plane(a)
        if lhs != rhs:
            rep.fail(name, f"pr(S) = {lhs}, l_F = {rhs}", _corpus_repro(seed, name))
    return rep


def check_equivalence(corpus, seed=0, labeling: str = SPLIT_LABELING) -> Report:
    rep = Report("A6 S and l_q determine each other")
    for name, f in corpus:
        rep.cases += 1
        a = analyze(f, labeling)
        s, q, h = s_lambda(a), lq(a), a.h
        repro = _corpus_repro(seed, name)
        if to_lq(s, h) != q:
            rep.fail(name, f"to_lq(S) = {to_lq(s, h)}, l_q = {q}", repro)
        try:
            back = to_s(q, h)
        except ValueError as exc:
            rep.fail(name, f"to_s failed: {exc}", repro)
        else:
            if back != s:
                rep.fail(name, f"to_s(l_q) = {back}, S = {s}", repro)
        if q.at_one() != bennequin(a):
            rep.fail(name, f"l_q(1) = {q.at_one()}, l = {bennequin(a)}", repro)
    return rep


# -- A7 -----------------------------------------------------------------------


def check_wall(seed: int = 0, count: int = 12, labeling: str = SPLIT_LABELING) -> Report:
    rep = Report("A7 dangerous self-tangency jump")
    for i in range(count):
        repro = f"frontlab fixtures wall --seed {seed} --instance {i}"
        try:
            w = fx.wall_pair(seed, i)
        except RuntimeError as exc:
            rep.fail(f"wall#{i}", str(exc), repro)
            continue
        rep.cases += 1
        a, b = w.loop_indices
        d = wall_crossing_delta(w.before, w.after, w.loop_indices, labeling)
        expect = wall_type2(a, b)
        if d != expect and d != -expect:
            rep.fail(f"wall#{i}", f"jump {d}, expected +-({expect}) for loops {a}, {b}", repro)
    return rep


# -- A8, A10 ------------------------------------------------------------------


def check_orbifold(mu_max: int = 12, mus=(2, 3, 4, 5), labeling: str = SPLIT_LABELING,
                   flip_endpoint: bool = False) -> Report:
    rep = Report("A8 orbifold relations and cone passage")
    rc = verify_r_consistency(mu_max, flip_endpoint)
    rep.cases += rc.cases
    for mu, label, which in rc.discrepancies:
        rep.fail(f"R mu={mu} class={label}", f"{which} differs between the two index-set forms",
                 f"frontlab verify --suite orbifold")
    rep.notes["six_variant_discrepancies"] = len(rc.six_discrepancies)
    rep.notes["six_variant_mus"] = sorted({d[0] for d in rc.six_discrepancies})
    for mu in mus:
        for reverse in (False, True):
            for side in (LEFT, RIGHT):
                rep.cases += 1
                case = f"cone mu={mu} reverse={reverse} side={side}"
                flag = " --reverse" if reverse else ""
                repro = f"frontlab fixtures cone_passage {mu} --side {side}{flag}"
                try:
                    p = fx.cone_pair(mu, reverse, side)
                except RuntimeError as exc:
                    rep.fail(case, str(exc), repro)
                    continue
                sb, ctx = s_lambda_orbifold(p.before, labeling=labeling)
                sa, ctx_a = s_lambda_orbifold(p.after, labeling=labeling)
                if ctx.lambda_class != ctx_a.lambda_class:
                    rep.fail(case, "homology class changed across the passage", repro)
                elif not equal_in_J(sb, sa, ctx):
                    rep.fail(case, "S(lambda) before and after differ in J", repro)
    return rep


def check_degeneration(corpus, seed=0, labeling: str = SPLIT_LABELING) -> Report:
    rep = Report("A10 no cone points gives the plane value")
    group = seifert_homology(OrbifoldDisk(()))
    for name, f in corpus:
        rep.cases += 1
        plain = f.with_cones(())
        s, _ = s_lambda_orbifold(plain, labeling=labeling)
        if s != laurent_to_ring(s_lambda(plain, labeling), group):
            rep.fail(name, "orbifold S(lambda) differs from the plane value",
                     _corpus_repro(seed, name))
    return rep


# -- A9 -----------------------------------------------------------------------


def check_quantum(seed: int = 0, count: int = 500) -> Report:
    rep = Report("A9 quantum decomposition")
    rng = random.Random(f"quantum/{seed}")
    for i in range(count):
        rep.cases += 1
        k = rng.randint(0, 5)
        ms = rng.sample(range(1, 13), k)
        terms = sorted(((m * rng.choice([1, -1]), Fraction(rng.randint(1, 10), 2)) for m in ms),
                       key=lambda t: (abs(t[0]), t[0]))
        p = LaurentHalf.zero("q")
        for m, c in terms:
            p = p + quantum_number(m) * c
        dec = quantum_decompose(p)
        case = f"combination#{i}"
        if dec.recompose() != p:
            rep.fail(case, "reconstruction differs")
        if list(dec.terms) != terms:
            rep.fail(case, f"decomposition {dec.terms} differs from {terms}")
        ms_out = [m for m, _ in dec.terms]
        if any(c <= 0 for _, c in dec.terms) or 0 in ms_out or \
                len({abs(m) for m in ms_out}) != len(ms_out):
            rep.fail(case, f"constraints violated by {dec.terms}")
        # a non-symmetric perturbation must be rejected
        bad = p + LaurentHalf.monomial(rng.randint(1, 13), 1, "q")
        rep.cases += 1
        try:
            quantum_decompose(bad)
        except ValueError:
            pass
        else:
            rep.fail(case, "asymmetric input was accepted")
    return rep


# -- A11 ----------------------------------------------------------------------


def check_calibration(seed: int = 0, count: int = 100, move_count: int = 20) -> Report:
    rep = Report("A11 calibration uniqueness")
    corpus = fx.corpus(seed, count)
    passing_labels = []
    for lab in SPLIT_LABELINGS:
        r = check_moves(seed, move_count, lab)
        rep.cases += 1
        rep.notes[f"labeling {lab}"] = {"cases": r.cases, "failures": len(r.failures)}
        if r.ok:
            passing_labels.append(lab)
    passing_rules = []
    for rule in CORNER_RULES:
        a2 = check_sigma(corpus, seed, rule)
        a3 = check_parity(corpus, seed, rule)
        rep.cases += 1
        rep.notes[f"corner rule {rule}"] = {"sigma_failures": len(a2.failures),
                                            "parity_failures": len(a3.failures)}
        if a2.ok and a3.ok:
            passing_rules.append(rule)
    rep.notes["passing_labelings"] = passing_labels
    rep.notes["passing_corner_rules"] = passing_rules
    repro = f"frontlab verify --suite calibration --seed {seed}"
    if len(passing_labels) != 1:
        rep.fail("labeling", f"{len(passing_labels)} labelings pass: {passing_labels}", repro)
    elif passing_labels[0] != SPLIT_LABELING:
        rep.fail("labeling", f"frozen labeling {SPLIT_LABELING} is not the passing one", repro)
    if len(passing_rules) != 1:
        rep.fail("corner rule", f"{len(passing_rules)} corner rules pass: {passing_rules}", repro)
    elif passing_rules[0] != CORNER_RULE:
        rep.fail("corner rule", f"frozen rule {CORNER_RULE} is not the passing one", repro)
    return rep


# -- suites -------------------------------------------------------------------


def run_suite(suite: str, seed: int = 0, count: int | None = None, tamper: bool = False):
    """List of reports for the named suite."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    out = []
    if suite in ("moves", "all"):
        out.append(check_moves(seed, count or 20))
    if suite in ("identities", "all"):
        corpus = fx.corpus(seed, count or 100)
        out += [check_sigma(corpus, seed, tamper=tamper), check_parity(corpus, seed, tamper=tamper),
                check_split(corpus, seed), check_splitting(corpus, seed),
                check_equivalence(corpus, seed)]
    if suite in ("wall", "all"):
        out.append(check_wall(seed, count or 12))
    if suite in ("orbifold", "all"):
        out.append(check_orbifold())
        out.append(check_degeneration(fx.corpus(seed, count or 100), seed))
    if suite in ("quantum", "all"):
        out.append(check_quantum(seed, count or 500))
    if suite in ("calibration", "all"):
        out.append(check_calibration(seed))
    return out
