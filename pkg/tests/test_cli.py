import csv
import io
import json
import subprocess
import sys

import pytest

from pbwlab.cli import run


def invoke(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    return code, out.getvalue()


def test_genocchi_n5():
    code, text = invoke("genocchi", "--n", "5")
    report = json.loads(text)
    assert code == 0
    assert report["schema"] == "pbwlab/1"
    assert report["results"]["h"] == "295"


def test_genocchi_q_both_formulas():
    code, text = invoke("genocchi", "--n", "4", "--q", "--verify")
    report = json.loads(text)
    assert code == 0
    expected = ["1", "3", "7", "10", "10", "6", "1"]
    assert report["results"]["poly_fermionic"] == expected
    assert report["results"]["poly_dellac"] == expected
    assert report["checks"] and all(c["status"] == "pass" for c in report["checks"])


def test_fflv_cross_oracles():
    code, text = invoke("fflv", "--n", "3", "--weight", "1,1")
    report = json.loads(text)
    assert code == 0
    assert report["results"] == {"fflv_points": "8", "weyl_dim": "8", "gt_patterns": "8"}
    assert report["status"] == "pass"


def test_tableaux_and_cells_and_dellac():
    code, text = invoke("tableaux", "--n", "4", "--weight", "0,1,0")
    assert code == 0 and json.loads(text)["results"]["tableaux"] == "6"
    code, text = invoke("cells", "--n", "4", "--verify")
    assert code == 0 and json.loads(text)["results"]["count"] == "38"
    code, text = invoke("dellac", "--n", "3", "--list")
    report = json.loads(text)
    assert report["results"]["count"] == "7"
    assert sorted(c["length"] for c in report["results"]["configurations"]) == ["0", "1", "1", "2", "2", "2", "3"]


def test_quiver_count():
    code, text = invoke("quiver", "--n", "3", "--count-fq", "2")
    report = json.loads(text)
    assert code == 0
    mods = report["results"]["modules"]
    assert mods["M1"]["points_Fq"] == "25"
    assert mods["M0"]["points_Fq"] == "21"
    assert mods["M1"]["rank_tuple"] == {"1,1": "3", "1,2": "2", "2,2": "3"}
    assert report["results"]["degenerations"]["M0->M1"] is True
    assert report["results"]["degenerations"]["M1->M0"] is False


def test_csv_format():
    code, text = invoke("fflv", "--n", "3", "--weight", "1,1", "--format", "csv")
    rows = list(csv.reader(io.StringIO(text)))
    assert code == 0
    assert rows[0] == ["kind", "name", "value", "expected", "status"]
    assert ["result", "weyl_dim", "8", "", ""] in rows
    assert rows[-1][0] == "check" and rows[-1][-1] == "pass"


@pytest.mark.parametrize(
    "argv",
    [
        ("fflv", "--n", "3", "--weight", "1"),
        ("fflv", "--n", "3", "--weight", "a,b"),
        ("genocchi", "--n", "-2"),
        ("quiver", "--n", "5", "--count-fq", "2"),
        ("quiver", "--n", "3", "--count-fq", "6"),
        ("nonsense",),
        (),
    ],
)
def test_bad_input_exit_2(argv):
    code, _ = invoke(*argv)
    assert code == 2


def test_output_is_byte_stable():
    assert invoke("dellac", "--n", "4", "--list") == invoke("dellac", "--n", "4", "--list")


def test_verify_small():
    code, text = invoke("verify", "--max-n", "3", "--max-weight", "1")
    report = json.loads(text)
    assert code == 0
    assert report["checks"] and report["status"] == "pass"
    assert report["results"]["failed"] == "0"


def test_failed_check_exits_1(monkeypatch):
    from pbwlab import cli
    monkeypatch.setattr(cli.poly, "gt_pattern_count", lambda lam: -1)
    code, text = invoke("fflv", "--n", "3", "--weight", "1,1")
    assert code == 1
    assert json.loads(text)["status"] == "fail"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "pbwlab", "genocchi", "--n", "3"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"]["h"] == "7"


def test_verify_parallel_matches_serial():
    from pbwlab.verify import Limits, run_all
    lim = Limits(max_n=3, max_weight=1)
    assert run_all(lim, workers=1) == run_all(lim, workers=2)
