import random

import pytest

from frontlab import fixtures as fx
from frontlab.front import double_points, index, serialize, validate


def test_named_fixtures_are_deterministic():
    for name, make in fx.NAMED.items():
        assert serialize(make()) == serialize(make()), name


def test_corpus_is_deterministic_and_valid():
    a, b = fx.corpus(3, 20), fx.corpus(3, 20)
    assert [serialize(f) for _, f in a] == [serialize(f) for _, f in b]
    assert all(validate(f).ok for _, f in a)
    assert [serialize(f) for _, f in fx.corpus(4, 20)] != [serialize(f) for _, f in a]


def test_corpus_limits(corpus):
    assert len(corpus) == 100
    for _, f in corpus:
        assert len(double_points(f)) <= 30
        assert f.cusp_count <= 8
    assert max(len(double_points(f)) for _, f in corpus) >= 10


def test_random_front_is_valid():
    rng = random.Random(11)
    for _ in range(10):
        assert validate(fx.random_front(rng)).ok


@pytest.mark.parametrize("family", sorted(fx.FAMILIES))
def test_move_pairs(family):
    kind = fx.FAMILIES[family][0]
    dc, dk = fx.EXPECTED_DELTAS[kind]
    if family == "cusp_pass":
        dc = -2
    for i in range(3):
        p = fx.move_pair(family, 0, i)
        assert validate(p.before).ok and validate(p.after).ok
        assert len(double_points(p.after)) - len(double_points(p.before)) == dc
        assert p.after.cusp_count - p.before.cusp_count == dk
        assert index(p.after) == index(p.before)
        assert serialize(fx.move_pair(family, 0, i).after) == serialize(p.after)


def test_unknown_family():
    with pytest.raises(KeyError):
        fx.move_pair("teleport", 0)


def test_wall_pairs():
    for i in range(4):
        w = fx.wall_pair(1, i)
        assert sum(w.loop_indices) == index(w.before) == index(w.after)
        assert abs(len(double_points(w.after)) - len(double_points(w.before))) == 2
        assert w.before.cusp_count == w.after.cusp_count


def test_cone_pairs_share_cone_and_index():
    for mu in (2, 3, 5):
        p = fx.cone_pair(mu)
        assert p.before.cones == p.after.cones
        assert validate(p.before).ok and validate(p.after).ok
        # the winding changes by mu and the index by mu - 1
        from frontlab.front import winding_number
        c = p.before.cones[0].point
        dw = winding_number(p.after, c) - winding_number(p.before, c)
        assert abs(dw) == mu
        assert abs(index(p.after) - index(p.before)) == mu - 1


def test_lens_windings():
    from frontlab.front import winding_number
    for k in (1, 2, 3):
        assert winding_number(fx.lens(k, 3), (0, 0)) == -k
