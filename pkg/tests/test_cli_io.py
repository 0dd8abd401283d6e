import csv
import json
import subprocess
import sys
from fractions import Fraction

import pytest

from kneser_transversal import errors
from kneser_transversal.cli import main
from kneser_transversal.geometry import PointConfig, is_general_position
from kneser_transversal.io import config_from_json, config_to_json, load_points, parse_rational
from kneser_transversal.report import bound_report, table_rows


def write(tmp_path, name, data):
    p = tmp_path / name
    p.write_text(json.dumps(data) if not isinstance(data, str) else data)
    return str(p)


@pytest.fixture
def square_file(tmp_path):
    return write(tmp_path, "square.json", {"dim": 2, "points": [["0", "0"], ["1", "0"], ["0", "1"], ["1", "1"]]})


# --- io -----------------------------------------------------------------------

def test_parse_rational():
    assert parse_rational("3/6") == Fraction(1, 2)
    assert parse_rational("-7") == -7
    assert parse_rational(4) == 4
    for bad in ("1.5", 1.5, "x", "1/0", True):
        with pytest.raises(errors.ParseError):
            parse_rational(bad)


def test_round_trip():
    cfg = PointConfig.from_points([(Fraction(1, 2), -3), (2, Fraction(-7, 9))])
    data = config_to_json(cfg)
    assert data == {"dim": 2, "points": [["1/2", "-3"], ["2", "-7/9"]]}
    assert config_from_json(data) == cfg


def test_bad_files(tmp_path):
    with pytest.raises(errors.ParseError):
        load_points(write(tmp_path, "a.json", "{not json"))
    with pytest.raises(errors.ParseError):
        load_points(write(tmp_path, "b.json", {"points": []}))
    with pytest.raises(errors.DimensionMismatch):
        load_points(write(tmp_path, "c.json", {"dim": 2, "points": [["1"]]}))


# --- report -------------------------------------------------------------------

def test_bound_report_3_5_2():
    rep = bound_report(3, 5, 2)
    assert rep["alpha"] == Fraction(1, 3)
    assert rep["z"] == rep["Z"] == rep["lemma_lower_bound"] == 7
    assert rep["m_star"] == 7
    assert any("DISCREPANCY" in n and "7 <= m*(3,5,2) <= 8" in n for n in rep["notes"])


def test_bound_report_other_cases():
    rep = bound_report(4, 4, 3)
    assert rep["range"] == "trivial" and rep["zeta"] == rep["m_star"] == 5
    rep = bound_report(3, 4, 1)
    assert rep["m_star_lambda_1"] == 4 + 2 * 2 == rep["m_star"]
    assert bound_report(3, 5, 3)["m_star_k_equals_lambda"] == 5
    with pytest.raises(errors.RangeViolation):
        bound_report(1, 5, 2)


def test_table_rows():
    rows = {(r["k"], r["d"], r["lambda"]): r for r in table_rows(5, 5, 3)}
    assert rows[(4, 4, 3)]["m_star"] == 5 and "trivial" in rows[(4, 4, 3)]["citation"]
    for d in range(1, 6):
        for k in range(1, min(d, 3) + 1):
            assert rows[(k, d, k)]["m_star"] == d
    r = rows[(3, 5, 2)]
    assert r["z"] == r["Z"] == r["zeta"] == 7 and "DISCREPANCY" in r["note"]
    with pytest.raises(errors.GridTooLarge):
        table_rows(50, 50, 50)


# --- cli ----------------------------------------------------------------------

def test_cli_radon_square(square_file, capsys):
    assert main(["radon", "--input", square_file, "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["positive"] == [1, 4] and out["negative"] == [2, 3]
    assert set(out["coefficients"].values()) == {"1/2"}


def test_cli_radon_moment_curve(tmp_path, capsys):
    path = str(tmp_path / "mc.json")
    assert main(["gen-cyclic", "--n", "4", "--d", "2", "--out", path]) == 0
    assert load_points(path).points == tuple((Fraction(t), Fraction(t * t)) for t in range(1, 5))
    assert main(["radon", "--input", path, "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert {frozenset(out["positive"]), frozenset(out["negative"])} == {frozenset({1, 3}), frozenset({2, 4})}


def test_cli_radon_errors(tmp_path, capsys):
    assert main(["radon", "--input", write(tmp_path, "m.json", "{oops")]) == 2
    assert "error" in capsys.readouterr().err
    three = write(tmp_path, "t.json", {"dim": 2, "points": [["0", "0"], ["1", "0"], ["0", "1"]]})
    assert main(["radon", "--input", three]) == 2


def test_cli_check_exit_codes(square_file, tmp_path, capsys):
    assert main(["check", "--input", square_file, "--t", "2,3", "--k", "2"]) == 0
    simplex = write(tmp_path, "s.json", {"dim": 4, "points": [
        ["0", "0", "0", "0"], ["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", "1"]]})
    capsys.readouterr()
    assert main(["check", "--input", simplex, "--t", "1,2", "--k", "3", "--format", "json"]) == 1
    out = json.loads(capsys.readouterr().out)
    assert out["verified"] is False and out["failing_kset"] == [3, 4, 5]
    assert main(["check", "--input", square_file, "--t", "1,2,3", "--k", "2"]) == 2


def test_cli_bounds(capsys):
    assert main(["bounds", "--k", "3", "--d", "5", "--lambda", "2"]) == 0
    out = capsys.readouterr().out
    assert "z: 7" in out and "Z: 7" in out and "DISCREPANCY" in out
    assert "for comparison, not computed" in out
    assert main(["bounds", "--k", "4", "--d", "4", "--lambda", "3", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["m_star"] == 5
    assert main(["bounds", "--k", "3", "--d", "6", "--lambda", "1", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["m_star_lambda_1"] == 10
    assert main(["bounds", "--k", "1", "--d", "6", "--lambda", "2"]) == 2


def test_cli_zeta(capsys):
    assert main(["zeta", "--k", "3", "--d", "5", "--lambda", "2", "--method", "both-agree",
                 "--format", "json", "--seed", "11"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["zeta"] == 7 and out["witness_gaps"] == [1, 1, 1, 0, 0]
    assert out["seed"] == 11 and out["transcript_length"] == 2 and out["notes"]
    assert main(["zeta", "--k", "4", "--d", "4", "--lambda", "3", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["zeta"] == 5
    assert main(["zeta", "--k", "2", "--d", "5", "--lambda", "2"]) == 2
    assert main(["zeta", "--k", "3", "--d", "5", "--lambda", "2", "--format", "csv"]) == 0
    rows = list(csv.DictReader(capsys.readouterr().out.splitlines()))
    assert rows[0]["zeta"] == "7"


def test_cli_table(tmp_path):
    out = tmp_path / "t.csv"
    assert main(["table", "--d-max", "5", "--k-max", "5", "--lambda-max", "3", "--out", str(out)]) == 0
    rows = list(csv.DictReader(out.open()))
    assert {"alpha", "z", "Z", "zeta", "m_star", "citation"} <= set(rows[0])
    row = next(r for r in rows if (r["k"], r["d"], r["lambda"]) == ("4", "4", "3"))
    assert row["m_star"] == "5"
    for r in rows:
        for col in ("alpha", "z", "Z", "zeta", "m_star"):
            assert "." not in r[col]
    assert main(["table", "--d-max", "50", "--k-max", "50", "--lambda-max", "50"]) == 2


def test_cli_gen_cyclic(tmp_path, capsys):
    path = str(tmp_path / "c.json")
    assert main(["gen-cyclic", "--n", "3", "--d", "3", "--params", "1/2,1,2", "--out", path]) == 0
    cfg = load_points(path)
    assert cfg.points[0] == (Fraction(1, 2), Fraction(1, 4), Fraction(1, 8))
    assert is_general_position(cfg)
    assert main(["gen-cyclic", "--n", "3", "--d", "2", "--params", "2,1,3"]) == 2


@pytest.mark.parametrize("suite", ["radon", "parity", "cyclic", "constructions"])
def test_cli_verify(suite, capsys):
    assert main(["verify", "--suite", suite, "--seed", "3"]) == 0
    assert f"PASS {suite}" in capsys.readouterr().out


def test_module_entry_point(square_file):
    proc = subprocess.run([sys.executable, "-m", "kneser_transversal", "check", "--input", square_file,
                           "--t", "2,3", "--k", "2"], capture_output=True, text=True)
    assert proc.returncode == 0 and "verified: True" in proc.stdout
