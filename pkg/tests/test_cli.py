import json

import pytest

from grobmod.cli import main, ALL_PASS, CHECK_FAILED, USAGE_ERROR


@pytest.fixture
def ideal_file(tmp_path):
    path = tmp_path / "twisted_cubic.ideal"
    path.write_text("\n".join([
        "# twisted cubic",
        "ring QQ[X,Y,Z,W] order grevlex(X,Y,Z,W)",
        "gens:",
        "X*Z - Y^2",
        "X*W - Y*Z",
        "Y*W - Z^2",
    ]) + "\n")
    return str(path)


def test_gb_verify_and_complete(ideal_file, capsys):
    assert main(["gb", "verify", ideal_file]) == ALL_PASS
    assert "verified" in capsys.readouterr().out
    assert main(["gb", "complete", ideal_file]) == ALL_PASS
    out = capsys.readouterr().out.strip().splitlines()
    assert len(out) == 3


def test_gb_verify_failure(tmp_path, capsys):
    path = tmp_path / "bad.ideal"
    path.write_text("ring QQ[X,Y] order grevlex(X,Y)\ngens:\nX + Y\nX\n")
    assert main(["gb", "verify", str(path)]) == CHECK_FAILED
    assert "remainder" in capsys.readouterr().out


def test_intersect(tmp_path, capsys):
    a = tmp_path / "a.ideal"
    a.write_text("ring QQ[X,Y] order grevlex(X,Y)\ngens:\nX\n")
    b = tmp_path / "b.ideal"
    b.write_text("ring QQ[X,Y] order grevlex(X,Y)\ngens:\nY\n")
    assert main(["intersect", str(a), str(b)]) == ALL_PASS
    assert capsys.readouterr().out.strip() == "X*Y"


def test_regseq_and_dim(ideal_file, capsys):
    assert main(["dim", ideal_file]) == ALL_PASS
    assert capsys.readouterr().out.strip() == "2"
    assert main(["regseq", ideal_file, "--tail", "1"]) == ALL_PASS
    assert "regular: True" in capsys.readouterr().out
    assert main(["regseq", ideal_file, "--tail", "4"]) == CHECK_FAILED


def test_artinian(tmp_path, capsys):
    path = tmp_path / "fat.ideal"
    path.write_text("ring QQ[X,Y] order grevlex(X,Y)\ngens:\nX^2\nY^2\nX*Y\n")
    assert main(["artinian", str(path)]) == ALL_PASS
    out = capsys.readouterr().out
    assert "dimension: 3" in out and "socle dimension: 2" in out
    infinite = tmp_path / "line.ideal"
    infinite.write_text("ring QQ[X,Y] order grevlex(X,Y)\ngens:\nX\n")
    assert main(["artinian", str(infinite)]) == CHECK_FAILED


def test_strata_and_orbits(capsys):
    assert main(["strata", "enum", "1,2,1"]) == ALL_PASS
    assert len(capsys.readouterr().out.strip().splitlines()) == 5
    assert main(["strata", "type", "1,2,1", "(1,1;0)"]) == ALL_PASS
    assert capsys.readouterr().out.strip() == "(2,2)"
    assert main(["strata", "count", "1,1,1,1", "2,1,1"]) == ALL_PASS
    assert capsys.readouterr().out.strip() == "3"
    assert main(["orbits", "census", "1,2,1", "2"]) == ALL_PASS
    out = capsys.readouterr().out
    assert "orbits: 5" in out and "matches rank invariant: True" in out


def test_jacobian(ideal_file, tmp_path, capsys):
    pt = tmp_path / "origin.point"
    pt.write_text("0, 0, 0, 0\n")
    assert main(["jacobian", ideal_file, str(pt)]) == ALL_PASS
    assert capsys.readouterr().out.strip() == "0"
    pt.write_text("1, 1, 1, 1\n")
    assert main(["jacobian", ideal_file, str(pt)]) == ALL_PASS
    assert capsys.readouterr().out.strip() == "2"


def test_classify(tmp_path, capsys):
    path = tmp_path / "data.json"
    path.write_text(json.dumps({
        "ell": 7, "q": 3,
        "chains": [{"label": "l", "shape": [2, 2]}],
        "inertial_type": [2, 2]}))
    assert main(["classify", str(path)]) == ALL_PASS
    report = json.loads(capsys.readouterr().out)
    assert report["case"] == "R22_hat"
    assert report["power_series_vars"] == 9
    path.write_text(json.dumps({
        "ell": 7, "q": 3,
        "chains": [{"label": "l", "shape": [2, 1, 1]}],
        "inertial_type": [2, 2]}))
    assert main(["classify", str(path)]) == CHECK_FAILED


def test_paper_suite_json(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["paper-suite", "--field", "F7",
                 "--json", str(out)]) == ALL_PASS
    assert "all pass: True" in capsys.readouterr().out
    report = json.loads(out.read_text())
    assert report["all_pass"] and report["field"] == "F7"


def test_usage_errors(tmp_path, capsys):
    assert main(["gb", "verify", str(tmp_path / "missing.ideal")]) == \
        USAGE_ERROR
    bad = tmp_path / "bad.ideal"
    bad.write_text("not a ring line\n")
    assert main(["gb", "verify", str(bad)]) == USAGE_ERROR
    bad.write_text("ring QQ[X] order grevlex(X)\ngens:\nX + w\n")
    assert main(["gb", "verify", str(bad)]) == USAGE_ERROR
    assert main(["paper-suite", "--field", "F2"]) == USAGE_ERROR
    assert main(["no-such-command"]) == USAGE_ERROR
    assert main(["strata", "type", "1,2,1"]) == USAGE_ERROR
    capsys.readouterr()
