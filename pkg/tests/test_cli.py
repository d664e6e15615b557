import json
import subprocess
import sys

import pytest

from antiramsey.cli import main
from antiramsey.coloring import EdgeColoring, format_coloring
from antiramsey.constructions import turan_extremal_loose
from antiramsey.hypergraph import Hypergraph, format_hypergraph


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr().out


def test_formulas(capsys, tmp_path):
    code, out = run(capsys, "formulas", "--n", "20", "--r", "3", "--k", "4..5", "--out", tmp_path / "f.csv")
    assert code == 0
    rows = out.splitlines()
    assert rows[0].startswith("n,r,k,ar_loose,ar_linear")
    assert rows[1].split(",")[3] == "173" and rows[2].split(",")[3] == "174"
    assert (tmp_path / "f.csv").read_text() == out


def test_construct_and_reverify(capsys, tmp_path):
    code, out = run(capsys, "construct", "--n", 10, "--r", 3, "--k", 4, "--out", tmp_path)
    assert code == 0
    cert = json.loads(out)
    assert cert["verdict"] == "certified-rainbow-free"
    assert cert["summary"]["colors"] == 37
    col = tmp_path / "lb_n10_r3_k4.col"
    first = col.read_bytes()
    code, out = run(capsys, "verify", col, "--certificate", tmp_path / "lb_n10_r3_k4.cert.json")
    assert code == 0 and json.loads(out)["matches_certificate"]
    run(capsys, "construct", "--n", 10, "--r", 3, "--k", 4, "--out", tmp_path)
    assert col.read_bytes() == first


def test_verify_refuted_and_indeterminate(capsys, tmp_path):
    f = tmp_path / "all.col"
    f.write_text(format_coloring(EdgeColoring.rainbow_all(8, 3)))
    code, out = run(capsys, "verify", f, "--family", "loose-path:4")
    assert code == 1 and json.loads(out)["verdict"] == "refuted"
    g = tmp_path / "k6.hg"
    g.write_text(format_hypergraph(Hypergraph.complete(6, 3)))
    code, out = run(capsys, "verify", g, "--family", "loose-path:4", "--budget", 5)
    assert code == 2 and json.loads(out)["verdict"] == "indeterminate"


def test_verify_hypergraph_free(capsys, tmp_path):
    g = tmp_path / "t.hg"
    g.write_text(format_hypergraph(turan_extremal_loose(10, 3, 5)))
    code, out = run(capsys, "verify", g, "--family", "loose-path:5,loose-cycle:5")
    assert code == 0 and json.loads(out)["verdict"] == "certified-F-free"


def test_parse_error(capsys, tmp_path):
    g = tmp_path / "bad.hg"
    g.write_text("5 3\n1 2 3\n1 2 7\n")
    code, out = run(capsys, "verify", g, "--family", "loose-path:2")
    assert code == 1
    err = json.loads(out)
    assert err["error"] == "ParseError" and "line 3" in err["message"]


def test_oracles(capsys, tmp_path):
    code, out = run(capsys, "oracle-ar", "--n", 5, "--r", 3, "--family", "loose-path:2")
    assert code == 0 and json.loads(out)["value"] == 2
    code, out = run(capsys, "oracle-ex", "--n", 6, "--r", 3, "--family", "loose-path:2", "--out", tmp_path)
    data = json.loads(out)
    assert data["value"] == 2
    witness = (tmp_path / "ex_n6_r3_witness.hg").read_text()
    code, out = run(capsys, "oracle-ex", "--n", 6, "--r", 3, "--family", "loose-path:2", "--out", tmp_path)
    assert (tmp_path / "ex_n6_r3_witness.hg").read_text() == witness
    code, out = run(capsys, "oracle-ex", "--n", 9, "--r", 3, "--family", "loose-path:2")
    assert code == 1 and json.loads(out)["error"] == "OracleLimitError"


def test_analyze(capsys, tmp_path):
    g = tmp_path / "t.hg"
    g.write_text(format_hypergraph(turan_extremal_loose(12, 3, 5)))
    code, out = run(capsys, "analyze", g, "--t", 2, "--tau", 1)
    data = json.loads(out)
    assert code == 0
    assert data["core"] == [1, 2] and data["missing"] == 0
    ids = data["identities"]
    assert ids["cross_plus_missing"] == ids["expected"]
    assert ids["E_1"] <= ids["E_1_bound"]


def test_audit_single_values_stable(capsys, tmp_path):
    code, out = run(capsys, "audit", "--grid", "small", "--skip-determinism", "--out", tmp_path)
    assert code == 0
    first = (tmp_path / "audit.json").read_text()
    assert set(json.loads(first)) == {str(i) for i in range(1, 9)}
    run(capsys, "audit", "--grid", "small", "--skip-determinism", "--out", tmp_path)
    assert (tmp_path / "audit.json").read_text() == first


def test_module_entry():
    out = subprocess.run([sys.executable, "-m", "antiramsey", "formulas", "--n", "20", "--r", "3", "--k", "5"],
                         capture_output=True, text=True, check=True).stdout
    assert "190" in out
