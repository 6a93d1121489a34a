import json

import pytest

from toroidal_ff.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_line_over_f2(capsys):
    code, out, _ = run(capsys, "analyze", "p1_f2", "--format", "json")
    rep = json.loads(out)
    assert code == 0
    assert rep["class_group"]["order"] == 1 and rep["toroidal_dimension"]["dimension"] == 0


def test_analyze_and_hecke_table_of_the_f2_curve(capsys):
    code, out, _ = run(capsys, "analyze", "y2_y_x3_f2", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["class_group"]["order"] == 3 and rep["toroidal_dimension"]["dimension"] == 1
    trivial = rep["l_polynomials"][0]
    assert trivial["coefficients"] == [{"num": 1, "den": 1}, {"num": 0, "den": 1}, {"num": 2, "den": 1}]
    code, out, _ = run(capsys, "hecke-table", "y2_y_x3_f2", "--format", "json")
    rows = [r for r in json.loads(out)["rows"] if r["origin"] == "certificate"]
    assert rows and all(abs(r["lambda"][0]) < 1e-12 for r in rows if r["place"]["degree"] == 1)


def test_reports_are_deterministic(capsys):
    first = run(capsys, "analyze", "y2_x5_plus_1_f3", "--format", "json")[1]
    second = run(capsys, "analyze", "y2_x5_plus_1_f3", "--format", "json")[1]
    assert first == second


@pytest.mark.parametrize("cmd", ["zeros", "toroidal", "hecke-table"])
def test_other_subcommands(capsys, cmd):
    code, out, _ = run(capsys, cmd, "y2_x3_minus_x_f3", "--format", "json")
    assert code == 0 and json.loads(out)


def test_text_output(capsys):
    code, out, _ = run(capsys, "toroidal", "y2_y_x3_f4")
    assert code == 0 and "dimension: 1" in out


def test_twist_search(capsys):
    code, out, _ = run(capsys, "twist-search", "p1_f3", "--s", "0.5-1.4298004336900634i", "--no-unramified",
                       "--min-degree", "3", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["found"] and rep["skipped"]


def test_malformed_spec_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"p": 3, "model": "hyperelliptic", "f": [0, "a", 0, 1]}))
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 1 and "f[1]" in err


def test_verify_singular_spec(capsys, tmp_path):
    bad = tmp_path / "sing.json"
    bad.write_text(json.dumps({"p": 3, "model": "hyperelliptic", "f": [0, 0, 0, 1], "h": []}))
    code, out, _ = run(capsys, "verify", str(bad), "--format", "json")
    rep = json.loads(out)
    assert code == 2 and not rep["passed"]
    checks = next(iter(rep["curves"].values()))["checks"]
    assert checks[0]["name"] == "field_curve.nonsingular" and not checks[0]["passed"]


def test_verify_bundled(capsys):
    code, out, _ = run(capsys, "verify", "--bundled", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["passed"]
    f4 = rep["curves"]["y2_y_x3_f4"]["checks"]
    assert any(c["name"] == "toroidal.dimension" and "lower bound" in c["detail"] for c in f4)


def test_timing_flag(capsys):
    code, _, err = run(capsys, "zeros", "p1_f2", "--timing")
    assert code == 0 and "elapsed" in err
    code, _, err = run(capsys, "zeros", "p1_f2")
    assert "elapsed" not in err


def test_precision_failure_exit_code(capsys, monkeypatch):
    from toroidal_ff.errors import PrecisionError

    def boom(*a, **k):
        raise PrecisionError("clusters too close")
    monkeypatch.setattr("toroidal_ff.cli.zeros_payload", boom)
    code, _, err = run(capsys, "zeros", "p1_f2")
    assert code == 3 and "precision" in err


def test_theorem_violation_exit_code(capsys, monkeypatch):
    from toroidal_ff.errors import TheoremViolation

    def boom(*a, **k):
        raise TheoremViolation("dimension mismatch")
    monkeypatch.setattr("toroidal_ff.cli.toroidal_payload", boom)
    code, _, _ = run(capsys, "toroidal", "p1_f2")
    assert code == 2
