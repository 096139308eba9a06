"""Command-line interface: exit codes, JSON reports, idempotent fmt."""

import json

import pytest

from novikov.algebra import Algebra
from novikov.cli import main
from novikov.fields import QQ, PrimeField

F5 = PrimeField(5)

A = Algebra(QQ, 3, {(0, 0, 1): QQ(1), (0, 1, 2): QQ(1)})


@pytest.fixture
def alg_file(tmp_path):
    p = tmp_path / "alg.json"
    p.write_text(A.dumps())
    return str(p)


def test_check(alg_file, capsys):
    assert main(["check", alg_file]) == 0
    out = capsys.readouterr().out
    assert "novikov: true" in out
    report = json.loads(out[out.index("{"):])
    assert report["novikov"] is True
    assert report["ann"] == 1
    assert report["nilpotency"] == 4


def test_check_report_file(alg_file, tmp_path, capsys):
    rp = tmp_path / "report.json"
    assert main(["--report", str(rp), "check", alg_file]) == 0
    capsys.readouterr()
    assert json.loads(rp.read_text())["novikov"] is True


def test_h2(alg_file, capsys):
    assert main(["h2", alg_file]) == 0
    out = capsys.readouterr().out
    report = json.loads(out)
    assert report["dim_h2"] == len(report["classes"])


def test_extend_and_reconstruct_roundtrip(alg_file, tmp_path, capsys):
    # pick one H^2 representative, extend, then reconstruct
    assert main(["h2", alg_file]) == 0
    h2 = json.loads(capsys.readouterr().out)
    coc = tmp_path / "coc.json"
    coc.write_text(json.dumps(h2["classes"][0]))
    ext = tmp_path / "ext.json"
    assert main(["extend", "--algebra", alg_file, "--cocycle", str(coc),
                 "--out", str(ext)]) == 0
    capsys.readouterr()
    B = Algebra.from_json(json.loads(ext.read_text()))
    assert B.dim == 4
    assert main(["reconstruct", str(ext)]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["base"]["dim"] + rec["cocycle"]["s"] == 4


def test_iso_exit_codes(tmp_path, capsys):
    X = Algebra(F5, 2, {(0, 0, 1): F5(1)})
    Y = Algebra(F5, 2, {(0, 0, 1): F5(4)})
    Z = Algebra(F5, 2, {})
    px, py, pz = (tmp_path / n for n in ("x.json", "y.json", "z.json"))
    px.write_text(X.dumps())
    py.write_text(Y.dumps())
    pz.write_text(Z.dumps())
    assert main(["iso", str(px), str(py)]) == 0
    assert json.loads(capsys.readouterr().out)["verdict"] == "isomorphic"
    assert main(["iso", str(px), str(pz)]) == 1
    assert json.loads(capsys.readouterr().out)["verdict"] == "proven_distinct"


def test_separate(tmp_path, capsys):
    X = Algebra(F5, 2, {(0, 0, 1): F5(1)})
    Z = Algebra(F5, 2, {})
    px, pz = tmp_path / "x.json", tmp_path / "z.json"
    px.write_text(X.dumps())
    pz.write_text(Z.dumps())
    assert main(["separate", str(px), str(pz)]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert len(rep["groups"]) == 2


def test_census(capsys):
    assert main(["census"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "218 (104, 82, 27, 5)"


def test_verify_catalog_good_labels(capsys):
    assert main(["verify-catalog", "--labels", "N_001,N_013"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["checked"] == 2 and not rep["failures"]


def test_verify_catalog_reports_known_failure(capsys):
    assert main(["verify-catalog", "--labels", "N_070"]) == 1
    rep = json.loads(capsys.readouterr().out)
    assert rep["failures"]
    assert all(f["failed"] == ["annihilator"] for f in rep["failures"])


def test_verify_catalog_parallel(capsys):
    assert main(["--jobs", "2", "verify-catalog",
                 "--labels", "N_001,N_002,N_003"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["checked"] == 3


def test_orbits_fp(capsys):
    assert main(["--field", "fp:3", "orbits-fp", "--base", "N3s_02"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["p"] == 3 and rep["classes"] == []


def test_orbits_fp_needs_prime_field(capsys):
    assert main(["orbits-fp", "--base", "N3s_02"]) == 2


def test_fmt_idempotent(tmp_path, capsys):
    p = tmp_path / "doc.json"
    p.write_text('{"b":1,\n "a": [1,2]}')
    assert main(["fmt", str(p)]) == 0
    once = p.read_text()
    assert main(["fmt", str(p)]) == 0
    assert p.read_text() == once
    assert json.loads(once) == {"a": [1, 2], "b": 1}


def test_input_errors(tmp_path, capsys):
    assert main(["check", str(tmp_path / "missing.json")]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("not json")
    assert main(["check", str(bad)]) == 2
