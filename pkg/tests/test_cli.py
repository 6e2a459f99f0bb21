import csv
import io
import json
import subprocess
import sys
from textwrap import dedent

import pytest

from eaqecc.cli import CSV_COLUMNS, CliConfig, main, run


def test_cosets_q8_text():
    out, status = run(["cosets", "--q", "8"])
    assert status == 0
    assert out == dedent(
        """\
        q=8 n=13 ord_lambda=9 rn=117 s=91 r_start=28
        cosets: 7 (singletons: 1, pairs: 6)
        singletons: {91}
          C_1 size=2 {1, 64}
          C_10 size=2 {10, 55}
          C_19 size=2 {19, 46}
          C_28 size=2 {28, 37}
          C_73 size=2 {73, 109}
          C_82 size=2 {82, 100}
          C_91 size=1 {91}
        """
    )


def test_cosets_q23_singletons():
    out, status = run(["cosets", "--q", "23"])
    assert status == 0
    assert "cosets: 54 (singletons: 2, pairs: 52)" in out
    assert "singletons: {265} {1537}" in out


def test_cosets_json():
    out, _ = run(["cosets", "--q", "8", "--format", "json"])
    data = json.loads(out)
    assert data["frame"]["n"] == 13
    assert {"rep": 91, "elems": [91]} in data["cosets"]


@pytest.mark.parametrize(
    "argv,msg",
    [
        (["cosets", "--q", "6"], "error: q must be a prime power"),
        (["family", "--family", "even-e1", "--q", "8", "--t", "1"], "error: e = 3 ≢ 1 mod 4"),
        (["family", "--family", "even-e1", "--q", "32", "--t", "8"], "t <= (q+3)/5 violated"),
        (["verify", "--q", "205"], "error: unsupported q = 205"),
    ],
)
def test_errors_exit_2(argv, msg):
    out, status = run(argv)
    assert status == 2
    assert msg in out


def test_family_text_report():
    out, status = run(["family", "--family", "even-e3", "--q", "8", "--t", "1"])
    assert status == 0
    assert "derived   [[13,5,7;4]]_8" in out
    assert "[PASS] rank(HH†) = |Z1|: expected 4, observed 4" in out
    assert out.endswith("=> ok\n")


def test_family_odd_q23():
    out, status = run(["family", "--family", "odd", "--q", "23", "--m", "1", "--t", "3", "--level", "analytic"])
    assert status == 0
    assert "derived   [[106,72,20;4]]_23" in out


def test_family_csv_schema():
    out, status = run(["family", "--family", "even-e3", "--q", "8", "--t", "2", "--format", "csv"])
    assert status == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == CSV_COLUMNS
    assert rows[0] == {
        "q": "8", "family": "even-e3", "t": "2", "m": "", "n": "13", "k": "1",
        "d": "9", "c": "4", "ea_mds": "1", "max_ent": "0",
    }


def test_table2_text():
    out, status = run(["table", "--id", "2"])
    assert status == 0
    lines = out.splitlines()
    assert lines[1:4] == ["q,e,code", "8,3,[[13,5,7;4]]_8", "8,3,[[13,1,9;4]]_8"]
    assert "golden diff: none" in out


def test_table_json():
    out, status = run(["table", "--id", "4", "--format", "json"])
    data = json.loads(out)
    assert status == 0 and data["ok"] and data["golden_diff"] == []
    assert data["rows"][2] == "[[106,72,20;4]]_23"


def test_verify_q8_minors():
    out, status = run(["verify", "--q", "8", "--level", "minors"])
    assert status == 0
    assert "mds=True(1716)" in out and "mds=True(1287)" in out
    assert "instances: 3, failures: 0" in out


def test_search_q8_consecutive():
    out, status = run(["search", "--q", "8", "--consecutive-only"])
    assert status == 0
    c4 = [line for line in out.splitlines() if ";4]]" in line and "EA-MDS" in line]
    assert sorted(line.split()[0] for line in c4) == ["[[13,1,9;4]]_8", "[[13,5,7;4]]_8"]


def test_search_zero_cosets():
    out, status = run(["search", "--q", "8", "--max-cosets", "0"])
    assert status == 0 and ": 0 codes" in out


def test_probe_seeded():
    a = run(["probe", "--q", "8", "--trials", "10", "--seed", "5", "--format", "json"])
    b = run(["probe", "--q", "8", "--trials", "10", "--seed", "5", "--format", "json"])
    assert a == b and a[1] == 0


def test_output_deterministic():
    argv = ["verify", "--q", "23", "--format", "json"]
    assert run(argv) == run(argv)


def test_cli_config_validation():
    with pytest.raises(ValueError):
        CliConfig(format="xml")
    with pytest.raises(ValueError):
        CliConfig(budget=0)


def test_main_writes_errors_to_stderr(capsys):
    assert main(["cosets", "--q", "6"]) == 2
    captured = capsys.readouterr()
    assert captured.out == "" and "prime power" in captured.err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "eaqecc", "cosets", "--q", "8", "--format", "csv"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "rep,size,elems"
