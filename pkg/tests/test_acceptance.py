"""Acceptance criteria A1 to A11 and the fixture anchors, at exact equality.

Each test records a PASS/FAIL line that is printed at the end of the run.
"""
import time

import pytest

from frontlab import fixtures as fx
from frontlab import verify as vf
from frontlab.algebra import parse_laurent
from frontlab.invariants import bennequin, lq, s_lambda, sk_polynomial
from frontlab.orbifold import OrbifoldDisk, class_of_front, seifert_homology

SEED = 0
TIME_LIMIT = 30.0


@pytest.fixture(scope="module")
def corpus100():
    return fx.corpus(SEED, 100)


def _check(log, report, elapsed=None, limit=None):
    detail = f"{report.cases} cases, {len(report.failures)} failures"
    if elapsed is not None:
        detail += f", {elapsed:.1f}s"
    ok = report.ok and (limit is None or elapsed < limit)
    log(report.name, ok, detail)
    for f in report.failures[:5]:
        print(f"  {f.case}: {f.message}  [{f.repro}]")
    assert report.ok, report.failures[:5]
    if limit is not None:
        assert elapsed < limit, f"{report.name} took {elapsed:.1f}s"


def _timed(fn, *args, **kw):
    t = time.perf_counter()
    rep = fn(*args, **kw)
    return rep, time.perf_counter() - t


def test_a1_move_invariance(acceptance_log):
    rep, dt = _timed(vf.check_moves, SEED, 20)
    assert len(fx.FAMILIES) >= 7
    _check(acceptance_log, rep, dt, TIME_LIMIT)


def test_a2_sigma_equals_index(acceptance_log):
    t = time.perf_counter()
    corpus = fx.corpus(SEED, 100)
    rep = vf.check_sigma(corpus, SEED)
    _check(acceptance_log, rep, time.perf_counter() - t, TIME_LIMIT)


def test_a3_gleam_parity(acceptance_log, corpus100):
    _check(acceptance_log, vf.check_parity(corpus100, SEED))


def test_a4_split_identities(acceptance_log, corpus100):
    _check(acceptance_log, vf.check_split(corpus100, SEED))


def test_a5_projection_gives_plane_invariant(acceptance_log, corpus100):
    _check(acceptance_log, vf.check_splitting(corpus100, SEED))


def test_a6_s_and_lq_determine_each_other(acceptance_log, corpus100):
    _check(acceptance_log, vf.check_equivalence(corpus100, SEED))


def test_a7_wall_crossing_jump(acceptance_log):
    _check(acceptance_log, vf.check_wall(SEED, 12))


def test_a8_orbifold(acceptance_log):
    rep, dt = _timed(vf.check_orbifold, 12, (2, 3, 4, 5))
    _check(acceptance_log, rep, dt, TIME_LIMIT)


def test_a9_quantum_decomposition(acceptance_log):
    _check(acceptance_log, vf.check_quantum(SEED, 500))


def test_a10_degeneration(acceptance_log, corpus100):
    _check(acceptance_log, vf.check_degeneration(corpus100, SEED))


def test_a11_calibration(acceptance_log):
    _check(acceptance_log, vf.check_calibration(SEED))


# -- fixture anchors ----------------------------------------------------------------

F_MINUS_E = parse_laurent("f-e")


def _lens_classes():
    for mu in (2, 3, 4, 5):
        for k in (1, 2, 3):
            lens = fx.lens(k, mu)
            g = seifert_homology(OrbifoldDisk.of_front(lens))
            yield (mu, k), class_of_front(lens), g.generator("f") * g.generator("f_a") ** -k


ANCHORS = {
    "l(circle) = 1": lambda: bennequin(fx.circle()) == 1,
    "l(saucer) = 1": lambda: bennequin(fx.saucer()) == 1,
    "S(saucer) = f - e": lambda: s_lambda(fx.saucer()) == F_MINUS_E,
    "l_q(saucer) = 1": lambda: lq(fx.saucer()) == parse_laurent("1"),
    "S(eight) = f - e": lambda: s_lambda(fx.eight()) == F_MINUS_E,
    "S'_K(eight) = 0": lambda: sk_polynomial(fx.eight()).is_zero(),
    "S'_K(two-crossing example) = t^2 - t^-1":
        lambda: sk_polynomial(fx.sk_example()) == parse_laurent("t^2-t^-1"),
    "class(lens k, mu) = f f_a^-k": lambda: all(got == want for _, got, want in _lens_classes()),
}


@pytest.mark.parametrize("label", list(ANCHORS))
def test_anchor(label, acceptance_log):
    ok = ANCHORS[label]()
    acceptance_log(f"anchor {label}", ok)
    assert ok
