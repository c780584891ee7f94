import json
import subprocess
import sys
from fractions import Fraction

import pytest

from drgscheme.catalog import BUILTIN, CatalogEntry, builtin_catalog, read_catalog, write_catalog
from drgscheme.cli import int_range, main
from drgscheme.report import AnalysisReport, analyze, exact_value
from drgscheme.algebraic import AlgebraicReal


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_expect_q_pass(capsys):
    code, out, _ = run(capsys, "analyze", "4,3,2,1;1,2,3,4", "--expect-q", "2")
    assert code == 0 and "Q-structures: 2" in out


def test_analyze_expect_q_mismatch(capsys):
    code, _, err = run(capsys, "analyze", "16,9,4,1;1,4,9,16", "--expect-q", "2")
    assert code == 1 and "found 1" in err


def test_analyze_invariant_violation(capsys):
    code, out, _ = run(capsys, "analyze", "3,2;1,4")
    assert code == 1 and "a_2" in out


def test_analyze_syntax_error(capsys):
    code, _, err = run(capsys, "analyze", "not an array")
    assert code == 2 and "cannot parse" in err


def test_analyze_json_round_trip(capsys):
    code, out, _ = run(capsys, "analyze", "10,5,4,2;1,2,2,10", "--format", "json")
    assert code == 0
    assert AnalysisReport.from_json(out).to_json() == out
    data = json.loads(out)
    assert data["spectrum"][1]["eigenvalue"]["minimal_polynomial"] == [-20, -4, 1]
    assert data["classification"]["tightness"] == "tight"


def test_family_command(capsys):
    code, out, _ = run(capsys, "family", "hadamard", "--gamma", "4")
    assert code == 0 and out.strip() == "8,7,4,1;1,4,7,8"
    code, _, _ = run(capsys, "family", "hamming")
    assert code == 2


def test_build_graph_edges(capsys):
    code, out, _ = run(capsys, "build-graph", "cycle", "--n", "5")
    assert code == 0
    assert out.splitlines() == ["0 1", "0 4", "1 2", "2 3", "3 4"]


def test_build_graph_check(capsys):
    code, out, _ = run(capsys, "build-graph", "hadamard", "--k", "3", "--check")
    assert code == 0 and "{8, 7, 4, 1; 1, 4, 7, 8}" in out and "PASS" in out


def test_build_graph_cap(capsys, monkeypatch):
    monkeypatch.setenv("DRG_MAX_VERTICES", "50")
    code, _, err = run(capsys, "build-graph", "hypercube", "--d", "7")
    assert code == 2 and "DRG_MAX_VERTICES" in err


def test_verify_thm3(capsys):
    code, out, _ = run(capsys, "verify", "thm3", "--d", "4", "--q", "2,3", "--gamma", "1,2,4")
    assert code == 0
    assert out.count("PASS") == 9 and "SKIP" in out


def test_verify_selfdual(capsys):
    code, out, _ = run(capsys, "verify", "selfdual", "--mu", "2..5")
    assert code == 0 and out.count("PASS") == 4


def test_verify_oracle(capsys):
    code, out, _ = run(capsys, "verify", "oracle", "--d", "2..4", "--k", "2")
    assert code == 0 and "FAIL" not in out


def test_verify_ngon_reports_c8(capsys):
    code, out, _ = run(capsys, "verify", "ngon", "--n", "4..8")
    lines = {ln.split()[1]: ln.split()[0] for ln in out.splitlines() if ln[:4] in ("PASS", "FAIL")}
    assert lines == {"C4": "PASS", "C5": "PASS", "C6": "PASS", "C7": "PASS", "C8": "FAIL"}
    assert code == 1


def test_verify_identities_forced_only(capsys):
    code, out, _ = run(capsys, "verify", "identities", "--mu", "2", "--theta2", "2..3")
    assert code == 1  # the theta1 root identity fails on the mu = 2 array
    assert "FAIL  self-dual mu=2: theta1 = (a1 + sqrt(a1^2 + 4k))/2" in out
    assert "FAIL  theta2" not in out


def test_int_range():
    assert int_range("2..5") == [2, 3, 4, 5]
    assert int_range("2,3") == [2, 3]
    assert int_range("2..3,7") == [2, 3, 7]


def test_bad_range_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "ngon", "--n", "x..y"])
    assert exc.value.code == 2


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "drgscheme", "family", "hamming", "--d", "3"], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.strip() == "3,2,1;1,2,3"


# --------------------------------------------------------------------------
# catalog and report


def test_builtin_catalog_size():
    assert len(BUILTIN) >= 20
    names = [e.name for e in BUILTIN]
    assert len(set(names)) == len(names)


def test_catalog_round_trip(tmp_path):
    path = tmp_path / "cat.jsonl"
    with open(path, "w") as fh:
        write_catalog(builtin_catalog(), fh)
    with open(path) as fh:
        back = list(read_catalog(fh))
    assert [(e.name, e.array, e.expect) for e in back] == [(e.name, e.array, e.expect) for e in BUILTIN]


def test_catalog_rejects_bad_lines():
    with pytest.raises(ValueError):
        list(read_catalog(["{not json"]))
    with pytest.raises(ValueError):
        list(read_catalog(['{"name": "x", "array": "3,2;1,4"}']))
    assert list(read_catalog(["", "# comment"])) == []


def test_catalog_command_file(capsys, tmp_path):
    path = tmp_path / "cat.jsonl"
    entries = [CatalogEntry("H(4,2)", "4,3,2,1;1,2,3,4", {"q_structures": 2}), CatalogEntry("wrong", "16,9,4,1;1,4,9,16", {"q_structures": 2})]
    with open(path, "w") as fh:
        write_catalog(entries, fh)
    code, out, _ = run(capsys, "catalog", str(path))
    rows = [json.loads(ln) for ln in out.splitlines()]
    assert [r["name"] for r in rows] == ["H(4,2)", "wrong"]
    assert [r["ok"] for r in rows] == [True, False]
    assert rows[1]["mismatches"] == {"q_structures": {"expected": 2, "observed": 1}}
    assert code == 1


def test_catalog_dump(capsys):
    code, out, _ = run(capsys, "catalog", "--dump")
    assert code == 0 and len(out.splitlines()) == len(BUILTIN)


def test_exact_value_serialization():
    v = exact_value(AlgebraicReal.sqrt(2))
    assert v["minimal_polynomial"] == [-2, 0, 1]
    assert v["decimal"].startswith("1.41421356237") and v["digits"] == 12
    lo, hi = (Fraction(x) for x in v["interval"])
    assert lo * lo < 2 < hi * hi and hi - lo < Fraction(1, 10**12)
    assert exact_value(AlgebraicReal.from_rational(-4))["interval"] == ["-4", "-4"]


def test_report_skips_downstream_on_invariant_failure():
    rep = analyze("3,2;1,4")
    assert not rep.feasible and "spectrum" not in rep.data


def test_report_text_mentions_membership():
    text = analyze("8,7,4,1;1,4,7,8").to_text()
    assert "diameter-4 list membership: v" in text
