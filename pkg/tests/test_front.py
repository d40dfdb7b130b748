from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from frontlab import fixtures as fx
from frontlab.front import (LEFT, RIGHT, Front, FrontParseError, InvalidFrontError, check,
                            cusp_data, double_points, from_dict, index, parse, parse_front,
                            scaled, serialize, serialize_front, smooth_split, split_components,
                            to_dict, translate, validate, winding_number)

SQUARE = "FRONT 1\nV 1 0\nV 0 1\nV -1 0\nV 0 -1\nSEED LEFT\n"


# -- parsing ------------------------------------------------------------------

def test_parse_square():
    f = parse(SQUARE)
    assert len(f.vertices) == 4
    assert f.seed == LEFT
    assert f.points[1] == (0, 1)


def test_parse_rational_literal_is_reduced():
    f = parse("FRONT 1\nV 2/4 0\nV 0 1\nV -1 0\nSEED RIGHT\n")
    assert f.vertices[0].x == Fraction(1, 2)
    assert "V 1/2 0" in serialize(f)


def test_parse_accepts_bytes_and_comments():
    f = parse_front(b"# a comment\nFRONT 1\nV 1 0  # first\nV 0 1\nV -1 0\nSEED LEFT\n")
    assert len(f.vertices) == 3


@pytest.mark.parametrize("text, fragment", [
    ("FRONT 2\nV 1 0\nV 0 1\nV -1 0\nSEED LEFT\n", "unsupported version"),
    ("FRONT 1\nV 1 0\nV 0 1\nV -1 0\n", "missing SEED"),
    ("FRONT 1\nV 1 0\nV 0 1\nV -1 0\nSEED LEFT\nSEED LEFT\n", "more than once"),
    ("FRONT 1\nV 1 zero\nV 0 1\nV -1 0\nSEED LEFT\n", ""),
    ("V 1 0\n", "header"),
    ("FRONT 1\nW 1 0\n", "unknown record"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(FrontParseError) as exc:
        parse(text)
    assert fragment in str(exc.value)
    assert exc.value.line >= 1 and exc.value.column >= 1


def test_parse_error_position():
    with pytest.raises(FrontParseError) as exc:
        parse("FRONT 1\nV 1 0\nV 0 x1\nV -1 0\nSEED LEFT\n")
    assert (exc.value.line, exc.value.column) == (3, 5)


@pytest.mark.parametrize("name", ["circle", "saucer", "eight"])
def test_serialize_roundtrip(name):
    f = fx.NAMED[name]()
    assert parse(serialize(f)) == f
    assert parse_front(serialize_front(f)) == f
    assert from_dict(to_dict(f)) == f


def test_roundtrip_keeps_cusps_and_cones():
    f = fx.lens(2, 3)
    g = parse(serialize(f))
    assert [v.cusp for v in g.vertices] == [v.cusp for v in f.vertices]
    assert g.cones == f.cones


# -- validation -----------------------------------------------------------------

def test_named_fronts_are_valid():
    for make in fx.NAMED.values():
        assert validate(make()).ok


def test_sharp_square_is_rejected_but_relaxed_accepts():
    f = parse(SQUARE)
    assert "sharp-turn" in validate(f).codes()
    assert validate(f, relaxed=True).ok


def test_odd_cusp_count():
    f = Front.from_points([(0, 0), (2, -1), (4, -1), (6, 0), (4, 1), (2, 1)], cusps=[0], seed=LEFT)
    assert "odd-cusps" in validate(f).codes()


def test_repeated_vertex():
    f = Front.from_points([(0, 0), (4, 0), (4, 0), (0, 4)], seed=LEFT)
    assert "repeated-vertex" in validate(f).codes()


def test_overlapping_edges_rejected():
    # a thin loop that runs back along itself
    f = Front.from_points([(0, 0), (10, 0), (20, 0), (10, 0), (5, 3)], seed=LEFT)
    assert not validate(f).ok


def test_check_raises():
    with pytest.raises(InvalidFrontError):
        check(parse(SQUARE))


def test_vertex_on_edge_rejected():
    pts = [(0, 0), (100, 0), (100, 100), (50, 0), (0, 100)]
    assert not validate(Front.from_points(pts, seed=LEFT)).ok


# -- index and cusps ---------------------------------------------------------------

def test_index_of_fixtures():
    assert index(fx.circle()) == 1
    assert index(fx.circle(ccw=False)) == -1
    assert index(fx.saucer()) == 0
    assert index(fx.eight()) == 0
    for k in (1, 2, 3):
        assert index(fx.lens(k, 3)) == 1 - k


def test_saucer_cusp_signs():
    # counterclockwise saucer with normals up: both cusps negative
    cd = cusp_data(fx.saucer())
    assert [c.sign for c in cd.cusps] == [-1, -1]
    assert (cd.c_plus, cd.c_minus) == (0, 1)
    cw = cusp_data(fx.saucer(ccw=False))
    assert (cw.c_plus, cw.c_minus) == (1, 0)


def test_reversal_and_coorientation_flip(corpus):
    for _, f in corpus[:30]:
        assert index(f.reversed()) == -index(f)
        assert index(f.coorientation_flipped()) == index(f)
        cd, rd = cusp_data(f), cusp_data(f.reversed())
        assert (rd.c_plus, rd.c_minus) == (cd.c_minus, cd.c_plus)


def test_rotated_start_keeps_everything(corpus):
    for _, f in corpus[:20]:
        g = f.rotated_start(3)
        assert index(g) == index(f)
        assert len(double_points(g)) == len(double_points(f))
        assert cusp_data(g).c_plus == cusp_data(f).c_plus


# -- double points and winding numbers --------------------------------------------------

def test_eight_has_one_positive_double_point():
    dps = double_points(fx.eight())
    assert len(dps) == 1
    assert dps[0].epsilon == 1
    assert dps[0].location == (0, 0)


def test_circle_winding():
    c = fx.circle()
    assert winding_number(c, (0, 0)) == 1
    assert winding_number(c, (5000, 0)) == 0
    assert winding_number(fx.circle(ccw=False), (0, 0)) == -1


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(-9, 9), st.integers(-9, 9))
def test_winding_independent_of_ray(px, py, dx, dy):
    f = fx.eight()
    p = (Fraction(px * 17 + 3, 7), Fraction(py * 11 + 1, 5))
    if dx == 0 and dy == 0:
        dx = 1
    assert winding_number(f, p, (dx, dy)) == winding_number(f, p)


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6), st.integers(1, 50))
def test_index_and_double_points_survive_similarity(dx, dy, k):
    f = fx.sk_example()
    g = scaled(translate(f, dx, dy), Fraction(k, 7))
    assert index(g) == index(f)
    assert len(double_points(g)) == len(double_points(f))
    assert [d.epsilon for d in double_points(g)] == [d.epsilon for d in double_points(f)]


# -- smoothing ----------------------------------------------------------------------

def test_eight_smoothing_labels_lobes():
    f = fx.eight()
    plus, minus = smooth_split(f, double_points(f)[0])
    assert (index(plus), index(minus)) == (1, -1)
    assert validate(plus, relaxed=True).ok and validate(minus, relaxed=True).ok


def test_split_indices_add_up(corpus):
    for _, f in corpus[:40]:
        h = index(f)
        for dp in double_points(f):
            s = split_components(f, dp)
            assert index(s.first) + index(s.second) == h
            assert validate(s.first, relaxed=True).ok
            assert validate(s.second, relaxed=True).ok


def test_unknown_labeling():
    f = fx.eight()
    with pytest.raises(ValueError):
        smooth_split(f, double_points(f)[0], "sideways")


def test_side_must_be_valid():
    with pytest.raises(ValueError):
        Front.from_points([(0, 0), (1, 0), (0, 1)], seed="UP")


def test_seed_affects_sides():
    a = Front.from_points([(0, 0), (1, 0), (0, 1)], seed=LEFT)
    b = Front.from_points([(0, 0), (1, 0), (0, 1)], seed=RIGHT)
    assert a.sides != b.sides
