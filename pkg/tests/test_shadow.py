from fractions import Fraction

from frontlab import fixtures as fx
from frontlab.front import double_points, index, winding_number
from frontlab.shadow import (dump, parity_check, render_svg, shadow_of_front, sigma,
                             sigma_value, to_json)


def _regions(front):
    return sorted((r.index, r.gleam) for r in shadow_of_front(front).regions
                  if r.compact) + [(0, None)]


def test_circle_shadow():
    sh = shadow_of_front(fx.circle())
    assert len(sh.regions) == 2
    assert _regions(fx.circle()) == [(1, 1), (0, None)]
    assert sigma(sh) == 1


def test_saucer_shadow():
    sh = shadow_of_front(fx.saucer())
    [inner] = sh.compact_regions()
    # the region winds once but carries no gleam, so sigma matches index 0
    assert inner.gleam == 0 and inner.index == 1
    assert sigma(sh) == 0


def test_eight_shadow():
    sh = shadow_of_front(fx.eight())
    compact = sorted((r.index, r.gleam) for r in sh.compact_regions())
    assert compact == [(-1, Fraction(1, 2)), (1, Fraction(1, 2))]
    assert sigma(sh) == 0
    assert parity_check(sh)


def test_face_count_matches_euler(corpus):
    for _, f in corpus[:40]:
        sh = shadow_of_front(f)
        v = len(double_points(f))
        # a connected curve with v transverse double points has 2v edges
        assert len(sh.regions) == v + 2


def test_region_index_is_winding_number(corpus):
    for _, f in corpus[:25]:
        sh = shadow_of_front(f)
        for r, region in zip(sh.regions, sh.arrangement.regions):
            assert winding_number(f, sh.arrangement.sample_point(region)) == r.index


def test_sigma_equals_index_and_parity_holds(corpus):
    for _, f in corpus:
        sh = shadow_of_front(f)
        assert sigma(sh) == index(f)
        assert parity_check(sh)


def test_tampered_gleam_breaks_sigma(corpus):
    broken = 0
    for _, f in corpus:
        if sigma_value(shadow_of_front(f, tamper=True)) != index(f):
            broken += 1
    assert broken > 0


def test_mixed_corner_rule_breaks_parity(corpus):
    assert any(not parity_check(shadow_of_front(f, corner_rule="mixed")) for _, f in corpus)


def test_dump_and_svg_are_deterministic():
    f = fx.sk_example()
    a, b = shadow_of_front(f), shadow_of_front(f)
    assert to_json(a) == to_json(b)
    assert render_svg(a) == render_svg(b)
    assert render_svg(a).startswith("<svg")
    d = dump(a)
    assert d["sigma"] == index(f)
    assert sum(1 for r in d["regions"] if r["gleam"] is None) == 1
