import json

import pytest

from frontlab import fixtures as fx
from frontlab.cli import main
from frontlab.front import serialize


@pytest.fixture
def saucer_file(tmp_path):
    p = tmp_path / "saucer.front"
    p.write_text(serialize(fx.saucer()))
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate(capsys, saucer_file):
    code, out, _ = run(capsys, "validate", saucer_file)
    assert code == 0 and json.loads(out)["ok"] is True


def test_validate_invalid(capsys, tmp_path):
    p = tmp_path / "sq.front"
    p.write_text("FRONT 1\nV 1 0\nV 0 1\nV -1 0\nV 0 -1\nSEED LEFT\n")
    code, out, _ = run(capsys, "validate", str(p))
    assert code == 1
    assert "sharp-turn" in out


def test_inv(capsys, saucer_file):
    code, out, _ = run(capsys, "inv", saucer_file)
    d = json.loads(out)
    assert code == 0
    assert (d["ind"], d["l"], d["l_q_text"], d["S_lambda_text"], d["l_F"]) == (0, 1, "1", "f-1", "1")
    assert d["identities"] == "pass"


def test_inv_single(capsys, saucer_file):
    code, out, _ = run(capsys, "inv", saucer_file, "--which", "l")
    assert code == 0 and "1" in out


def test_info_and_shadow(capsys, saucer_file):
    code, out, _ = run(capsys, "info", saucer_file)
    assert code == 0 and json.loads(out)["C_minus"] == "1"
    code, out, _ = run(capsys, "shadow", saucer_file)
    assert code == 0 and json.loads(out)["sigma"] == 0


def test_shadow_svg(capsys, saucer_file, tmp_path):
    svg = tmp_path / "s.svg"
    code, _, _ = run(capsys, "shadow", saucer_file, "--svg", str(svg))
    assert code == 0 and svg.read_text().startswith("<svg")


def test_convert(capsys):
    code, out, _ = run(capsys, "convert", "--to-lq", "f-1", "--h", "0")
    assert code == 0 and out.strip() == "1"
    code, out, _ = run(capsys, "convert", "--to-s", "1", "--h", "0")
    assert code == 0 and out.strip() == "f-1"
    code, _, err = run(capsys, "convert", "--to-s", "q", "--h", "0")
    assert code == 1 and err


def test_parse_error_exit_code(capsys, tmp_path):
    p = tmp_path / "bad.front"
    p.write_text("not a front\n")
    code, _, err = run(capsys, "inv", str(p))
    assert code == 2 and "line 1" in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "inv", str(tmp_path / "nope.front"))
    assert code == 3 and err


def test_orbifold(capsys, tmp_path):
    p = tmp_path / "lens.front"
    p.write_text(serialize(fx.lens(2, 3)))
    code, out, _ = run(capsys, "orbifold", str(p))
    d = json.loads(out)
    assert code == 0 and d["class"] == [1] and d["group"] == "Z"


def test_fixtures_to_dir(capsys, tmp_path):
    code, _, _ = run(capsys, "fixtures", "cusp_birth_left", "--seed", "2", "--out", str(tmp_path))
    assert code == 0
    assert len(list(tmp_path.glob("*.front"))) == 2


def test_fixtures_unknown(capsys):
    code, _, err = run(capsys, "fixtures", "list")
    assert code == 1 and "known" in err


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "quantum", "--count", "20")
    assert code == 0 and json.loads(out)["ok"] is True


def test_verify_tampered_is_red(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "identities", "--count", "30",
                       "--dev-tamper-gleam")
    assert code == 1 and json.loads(out)["ok"] is False


def test_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("FRONTLAB_SEED", "5")
    code, out, _ = run(capsys, "verify", "--suite", "quantum", "--count", "5")
    assert code == 0 and json.loads(out)["seed"] == 5


def test_fixture_alias(capsys):
    code, out, _ = run(capsys, "fixtures", "cusp_birth")
    d = json.loads(out)
    assert code == 0 and set(d) == {"cusp_birth_left_before", "cusp_birth_left_after"}
