import json
import subprocess
import sys
from fractions import Fraction

import pytest

from measdecomp import cli


def run(tmp_path, doc, *argv):
    path = tmp_path / "problem.json"
    path.write_text(doc if isinstance(doc, str) else json.dumps(doc))
    out = tmp_path / "report.json"
    code = cli.main([*argv[:1], "--input", str(path), "--output", str(out), *argv[1:]])
    report = json.loads(out.read_text()) if out.exists() else None
    return code, report


BASIC = {"space": ["a1", "a2", "a3"], "measures": {"mu": ["1", "0", "2"]}, "family": [["a1"], ["a2"]]}


def test_report_echoes_input(tmp_path):
    code, report = run(tmp_path, BASIC, "decompose")
    assert code == 0
    assert report["input"] == BASIC
    assert report["support"] == ["a1", "a2"]


def test_decompose_round_trip(tmp_path):
    doc = {"space": ["p", "q", "r", "s"], "measures": {"mu": ["-7/3", "0", "5/2", "1"]},
           "family": [["p"], ["r", "s"]]}
    code, report = run(tmp_path, doc, "decompose")
    assert code == 0
    summed = [Fraction(a) + Fraction(d) for a, d in zip(report["atomic"], report["diffuse"])]
    assert summed == [Fraction(v) for v in doc["measures"]["mu"]]
    assert all(isinstance(v, str) for v in report["atomic"] + report["diffuse"])


@pytest.mark.parametrize("doc", [
    "{not json",
    {"measures": {"mu": ["1"]}},
    {"space": ["a"], "line": {"m": 1}, "measures": {}},
    {"space": ["a", "b"], "measures": {"mu": [0.5, "1"]}, "family": [["a"]]},
    {"space": ["a", "b"], "measures": {"mu": ["1", "x"]}, "family": [["a"]]},
    {"space": ["a", "b"], "measures": {"mu": ["1", "2"]}, "family": [["zz"]]},
    {"space": ["a", "b"], "measures": {"mu": ["1"]}, "family": [["a"]]},
    {"space": ["a", "a"], "measures": {"mu": ["1", "2"]}, "family": [["a"]]},
    {"space": ["a", "b"], "measures": {"mu": ["1", "2"]}},
    {"space": ["a", "b"], "measures": {"mu": ["1", "2"]}, "family": "bogus"},
    {"space": ["a", "b"], "measures": {"mu": ["1", "2"]}, "family": [["a"]], "target": "nope"},
])
def test_parse_errors_exit_1(tmp_path, doc):
    assert run(tmp_path, doc, "decompose")[0] == cli.EXIT_PARSE


def test_missing_file_exit_1(tmp_path):
    assert cli.main(["decompose", "--input", str(tmp_path / "absent.json")]) == cli.EXIT_PARSE


def test_semantic_errors_exit_2(tmp_path, capsys):
    empty = {"space": ["a", "b"], "measures": {"mu": ["1", "2"]}, "family": []}
    assert run(tmp_path, empty, "decompose")[0] == cli.EXIT_SEMANTIC
    signed_line = {"line": {"m": 2}, "measures": {"mu": {"densities": ["1", "-1"]}}}
    assert run(tmp_path, signed_line, "support")[0] == cli.EXIT_SEMANTIC
    non_normal = {"spectral": {"normal_matrix": [[0, 1], [0, 0]]}, "family": [["x"]]}
    assert run(tmp_path, non_normal, "spectral")[0] == cli.EXIT_SEMANTIC
    incomplete = {"spectral": {"dim": 2, "outcomes": ["x"], "projections": [[["1", "0"], ["0", "0"]]]},
                  "family": [["x"]]}
    assert run(tmp_path, incomplete, "spectral")[0] == cli.EXIT_SEMANTIC
    assert "IncompleteError" in capsys.readouterr().err


def test_builtin_family_tags(tmp_path):
    doc = {"space": ["a", "b", "c"], "measures": {"mu": ["3", "-1", "0"], "nu": ["0", "1", "0"]},
           "family": "positive-sets"}
    code, report = run(tmp_path, doc, "decompose")
    assert code == 0 and report["support"] == ["a", "c"]
    assert report["atomic"] == ["3", "0", "0"] and report["diffuse"] == ["0", "-1", "0"]
    doc["family"] = "null-sets-of:nu"
    code, report = run(tmp_path, doc, "decompose")
    assert report["support"] == ["a", "c"]
    doc["family"] = "countable"
    code, report = run(tmp_path, doc, "decompose")
    assert report["support"] == ["a", "b", "c"] and report["diffuse"] == ["0", "0", "0"]
    for tag in ("positive-sets", "null-sets-of:nu"):
        doc["family"] = tag
        assert run(tmp_path, doc, "check", "--wrt", "nu")[0] == 0


def test_numeric_spectral(tmp_path):
    doc = {"spectral": {"normal_matrix": [[1.0, 0, 0], [0, 1.0, 0], [0, 0, 2.0]]}, "family": [["1"]]}
    code, report = run(tmp_path, doc, "spectral")
    assert code == 0
    assert report["outcomes"] == ["1", "2"]
    assert report["control"] == ["3/16", "1/32"]
    assert report["atomic"][0][0] == [1.0, 0.0]
    assert run(tmp_path, doc, "check")[0] == 0


def test_wrong_kind_of_target(tmp_path):
    line = {"line": {"m": 1}, "measures": {"mu": {"densities": ["1"]}}}
    assert run(tmp_path, line, "decompose")[0] == cli.EXIT_PARSE
    assert run(tmp_path, BASIC, "support")[0] == cli.EXIT_PARSE
    assert run(tmp_path, BASIC, "lebesgue")[0] == cli.EXIT_PARSE


def test_check_reports_every_invariant(tmp_path):
    doc = dict(BASIC, measures={"mu": ["1", "0", "2"], "nu": ["0", "3", "-1"]})
    code, report = run(tmp_path, doc, "check", "--wrt", "nu", "--seed", "3", "--samples", "50")
    assert code == 0
    names = [c["name"] for c in report["checks"]]
    assert any("essential maximum" in n for n in names)
    assert any("Hahn" in n for n in names)
    assert any("lattice sup" in n for n in names)
    assert any("Lebesgue" in n for n in names)
    assert report["seed"] == 3 and report["samples"] == 50


def test_console_script_stdout(tmp_path):
    path = tmp_path / "p.json"
    path.write_text(json.dumps(BASIC))
    proc = subprocess.run([sys.executable, "-m", "measdecomp.cli", "decompose", "--input", str(path)],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["atomic"] == ["1", "0", "0"]


@pytest.mark.parametrize("doc", [
    {"spectral": {"dim": 2, "outcomes": ["x"], "projections": {"y": [["1", "0"], ["0", "1"]]}}},
    {"line": {"m": 2}, "measures": {"mu": {"densities": ["1", "1"], "atoms": [["1/2", "1"], ["1/2", "2"]]}}},
    {"line": 3, "measures": {}},
    {"space": ["a"], "measures": {"theta": [["1", "2"]], "bad": [["1"], "2"]}},
])
def test_malformed_structures_exit_1(tmp_path, doc):
    assert run(tmp_path, doc, "support")[0] == cli.EXIT_PARSE
