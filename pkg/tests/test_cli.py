import io
import json
import re
import subprocess
import sys

import pytest

from unitary_satake.cli import CONFIG_ENV, main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv)
    return code, json.loads(out) if out else None


def test_regions():
    assert run_json("regions", "F4")[1]["regions"] == 105
    assert run_json("regions", "E8")[1]["regions"] == 25080
    assert run_json("regions", "A", "1")[1]["regions"] == 2


def test_classify_rows():
    code, data = run_json("classify", "C", "4")
    assert code == 0
    assert data["unitary_set"] == [["0/1"] * 4, ["0/1"] * 3 + ["1/2"]]
    assert data["unitary_set_labels"] == ["0", "1/2 omega_4"]
    assert run_json("classify", "D", "5")[1]["unitary_set_labels"] == ["0", "1/2 omega_5"]
    assert run_json("classify", "D5")[1]["unitary_set_labels"] == ["0", "1/2 omega_5"]


def test_classify_with_oracle():
    code, data = run_json("classify", "E8", "--oracle")
    assert code == 0
    assert data["oracle"]["agrees"] is True
    assert data["unitary_set_labels"] == ["0"]


def test_coroots_level():
    code, data = run_json("coroots", "F4", "--level", "9")
    assert data["count"] == 1
    assert data["coroots"][0]["vector"] == ["1/1", "1/1", "1/1", "-1/1"]
    assert run_json("coroots", "A", "3")[1]["count"] == 6


def test_fold_and_table1():
    code, data = run_json("fold", "D", "4", "--order", "3")
    assert code == 0 and data["folded_type"] == "G2"
    code, data = run_json("table1")
    assert [r["folded_type"] for r in data["table1"]] == ["B_n", "C_n", "C_{n-1}", "G_2", "F_4"]
    assert run("fold", "E7")[0] == 1


def test_check_point_e7():
    code, data = run_json("check-point", "E7", "--nu", "0,0,0,0,0,0,1/2")
    assert code == 0
    assert data["status"] == "unitary"
    assert data["alcove_pairing"] == "1/2"
    assert data["gate"]["verdict"] == "not_half_integral"


def test_check_point_psu_exit_code():
    code, data = run_json("check-point", "A", "4", "--order", "2", "--nu", "0,1/2")
    assert code == 2
    assert data["gate"]["psu_obstruction"] is True


def test_check_point_dominates_first():
    code, data = run_json("check-point", "A", "1", "--nu=-1/2")
    assert data["dominant_fw"] == ["1/2"] and data["weyl_word"] == [1]


def test_wd_check(tmp_path):
    path = tmp_path / "wd.json"
    path.write_text(json.dumps({"center_weight": 1, "pieces": [{"weight": "0", "dim": 1}, {"weight": "2", "dim": 1}],
                                "blocks": [{"from_weight": "0", "to_weight": "2", "matrix": [["1"]]}]}))
    code, data = run_json("wd-check", "--file", str(path))
    assert code == 0 and data["verdict"] == "pure_of_weight_1"
    code, data = run_json("wd-check", "--file", str(path), "--direction", "lowering")
    assert data["verdict"] == "impure"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"center_weight": 1, "pieces": [{"weight": "0", "dim": 1}],
                               "blocks": [{"from_weight": "0", "to_weight": "2", "matrix": [["1"]]}]}))
    assert run("wd-check", "--file", str(bad))[0] == 1
    assert run("wd-check", "--file", str(tmp_path / "missing.json"))[0] == 1


@pytest.mark.parametrize("argv", [
    ["classify", "Q", "3"], ["classify", "D", "2"], ["regions"], ["check-point", "A", "2", "--nu", "0.5,0"],
    ["check-point", "A", "2", "--nu", "1"], ["coroots", "A", "2", "--level", "0"], ["nonsense"],
    ["classify", "E7", "--rank-ceiling", "5"],
])
def test_invalid_input_exits_1(argv):
    code, out, err = run(*argv)
    assert code == 1 and out == "" and err.startswith("error:")


def test_formats():
    code, text, _ = run("regions", "G2", "--format", "text")
    assert "regions: 8" in text
    code, md, _ = run("table1", "--format", "markdown")
    assert md.count("\n|") >= 7


def test_config_file_and_env(tmp_path, monkeypatch):
    overrides = tmp_path / "r0.json"
    overrides.write_text(json.dumps({"entries": [{"type": "C", "rank": 4, "r0": 5, "source": "local"}]}))
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"r0_overrides": "r0.json", "output_format": "text"}))
    code, out, _ = run("classify", "C", "4", "--config", str(cfg))
    assert code == 0 and "r0_source: local" in out
    monkeypatch.setenv(CONFIG_ENV, str(cfg))
    code, out, _ = run("classify", "C", "4", "--format", "json")
    assert json.loads(out)["r0_source"] == "local"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"colour": "red"}))
    assert run("regions", "G2", "--config", str(bad))[0] == 1


def test_json_has_no_floats():
    for argv in (["full-table"], ["fold", "E6"], ["check-point", "F4", "--nu", "1/3,0,0,1/7"]):
        out = run(*argv)[1]
        assert not re.search(r"\d\.\d", out)


def test_full_table_deterministic():
    a = run("full-table", "--format", "json")
    b = run("full-table", "--format", "json")
    assert a == b and a[0] == 0
    rows = json.loads(a[1])["half_integral_unitary"]
    assert {r["type"]: r["unitary_set"] for r in rows}["E7"] == ["0", "1/2 omega_7"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "unitary_satake", "regions", "F4"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["regions"] == 105
