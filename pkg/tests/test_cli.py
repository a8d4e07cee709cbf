import json

import pytest

from quiddity.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_solution(capsys):
    code, out, _ = run(capsys, "verify", "1,1,2,1,1")
    assert code == 0
    assert "Problem III" in out
    assert "rotation index: 3/2" in out


def test_verify_non_solution(capsys):
    code, out, _ = run(capsys, "verify", "2,2")
    assert code == 1
    assert "not a solution" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "verify", "1,1,1")
    assert code == 0
    doc = json.loads(out)
    assert doc["class"] == "II"
    assert doc["S"] == 0 and doc["R"] == 0
    assert doc["sum"] == doc["sum_expected"] == 3


def test_verify_bad_word(capsys):
    code, _, err = run(capsys, "verify", "1,x,3")
    assert code == 2
    assert "cannot parse" in err


def test_enumerate_count(capsys):
    code, out, _ = run(capsys, "enumerate", "--problem", "1", "--n", "8", "--count")
    assert (code, out.strip()) == (0, "34")


def test_enumerate_words(capsys):
    code, out, _ = run(capsys, "enumerate", "--problem", "II", "--n", "4")
    assert code == 0
    assert sorted(out.split()) == ["1,2,1,2", "2,1,2,1"]


def test_enumerate_engines_agree(capsys):
    code, out, _ = run(capsys, "enumerate", "--problem", "3", "--n", "5",
                       "--count", "--engine", "both")
    assert (code, out.strip()) == (0, "75")


def test_enumerate_orbits(capsys):
    code, out, _ = run(capsys, "enumerate", "--problem", "I", "--n", "7",
                       "--count", "--orbits", "dihedral")
    assert (code, out.strip()) == (0, "1")


def test_enumerate_budget_exceeded(capsys):
    code, _, err = run(capsys, "enumerate", "--problem", "2", "--n", "20", "--count")
    assert code == 3
    assert "budget" in err.lower() or "ceiling" in err.lower()


def test_dissect_json(capsys):
    code, out, _ = run(capsys, "dissect", "1,3,1,2,2")
    assert code == 0
    doc = json.loads(out)
    assert doc["quiddity"] == [1, 3, 1, 2, 2]
    assert sorted(map(tuple, doc["diagonals"])) == [(1, 3), (1, 4)]


def test_dissect_all(capsys):
    code, out, _ = run(capsys, "dissect", "2,1,2,1,2,1,2,1", "--all")
    assert code == 0
    assert len(out.strip().splitlines()) == 2


def test_dissect_render_dot(capsys):
    code, out, _ = run(capsys, "dissect", "1,3,1,2,2", "--render", "dot")
    assert code == 0
    assert out.startswith("graph")


def test_dissect_non_solution(capsys):
    code, _, _ = run(capsys, "dissect", "3,3,3")
    assert code == 1


def test_frieze_text(capsys):
    code, out, _ = run(capsys, "frieze", "1,1,2,1,1")
    assert code == 0
    assert "tame: True" in out
    assert "glide symmetric: True" in out
    assert len(out.strip().splitlines()) == 11  # 9 rows + 2 diagnostics


def test_frieze_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "frieze", "1,3,1,2,2")
    assert code == 0
    doc = json.loads(out)
    assert doc["rows"][2] == [2, 2, 1, 3, 1]
    assert doc["tame"] is True


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "2,1,1,1")
    assert code == 0
    assert "reduced word: 1,1,2,2" in out
    assert "index: 1" in out


def test_decompose_bad_det(capsys):
    code, _, err = run(capsys, "decompose", "1,2,3,4")
    assert code == 2
    assert "determinant" in err


def test_farey(capsys):
    code, out, _ = run(capsys, "farey", "5")
    assert code == 0
    assert "4,1,2,3,1,5,1,3,2,1,4" in out
    assert "Problem II" in out


def test_farey_bad_order(capsys):
    code, _, _ = run(capsys, "farey", "1")
    assert code == 2


def test_usage_error_from_argparse(capsys):
    assert main(["no-such-command"]) == 2
