import pytest

from frontlab import verify as vf
from frontlab.front import SPLIT_LABELING


def test_other_labeling_breaks_move_invariance():
    other = "turn_right" if SPLIT_LABELING == "turn_left" else "turn_left"
    rep = vf.check_moves(0, 5, other)
    assert not rep.ok
    assert all(f.repro.startswith("frontlab fixtures ") for f in rep.failures)


def test_tampered_gleam_is_caught(corpus):
    assert not vf.check_sigma(corpus, 0, tamper=True).ok
    assert not vf.check_parity(corpus, 0, tamper=True).ok


def test_other_corner_rule_is_caught_by_parity_only(corpus):
    # both rules give sigma = index, only the parity check tells them apart
    assert vf.check_sigma(corpus, 0, "mixed").ok
    assert not vf.check_parity(corpus, 0, "mixed").ok


def test_moved_endpoint_breaks_orbifold_check():
    assert not vf.check_orbifold(12, (2, 3), flip_endpoint=True).ok


def test_calibration_notes():
    rep = vf.check_calibration(0, count=40, move_count=5)
    assert rep.ok
    assert rep.notes["passing_labelings"] == [SPLIT_LABELING]
    assert len(rep.notes["passing_corner_rules"]) == 1


def test_report_serializes():
    d = vf.check_quantum(0, 10).to_dict()
    assert d["ok"] and d["cases"] == 20


def test_unknown_suite():
    with pytest.raises(ValueError):
        vf.run_suite("everything")
