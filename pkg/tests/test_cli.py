"""CLI contract: exit codes, formats, column handling."""

import csv
import io
import json

from qident.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_json_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "dkm",
                           "--order", "60", "--max", "80", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["suite"] == "dkm"
    assert payload["parameters"] == {"order": 60, "max": 80}
    for check in payload["checks"]:
        assert check["status"] == "pass"
        assert set(check) == {"name", "status", "locus", "expected", "actual"}


def test_verify_json_roundtrips(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "corollary",
                           "--order", "40", "--max", "60", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert json.loads(json.dumps(payload)) == payload


def test_verify_all_small(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "all",
                           "--order", "32", "--max", "60")
    assert code == 0
    assert out.count("suite:") == 7
    assert "FAIL" not in out


def test_verify_unknown_suite_is_usage_error(capsys):
    code = main(["verify", "--suite", "bogus"])
    assert code == 2


def test_verify_failure_exit_code(capsys, monkeypatch):
    from qident import _kernels

    real = _kernels.sigma_table

    def broken(maxn, k=0):
        table = real(maxn, k).copy()
        table[-1] += 1
        return table

    monkeypatch.setattr(_kernels, "sigma_table", broken)
    code, out, _ = run_cli(capsys, "verify", "--suite", "theorem61",
                           "--order", "32", "--max", "59")
    assert code == 1
    assert "FAIL" in out


def test_table_text_rows(capsys):
    code, out, _ = run_cli(capsys, "table", "--max", "7")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].split() == ["n", "a", "b", "r3", "H", "H4", "sigma0"]
    assert lines[1].split() == ["0", "1", "1", "1", "-1/12", "-1/12", "-"]
    assert lines[4].split() == ["3", "8", "8", "8", "1/3", "4/3", "2"]
    assert lines[8].split() == ["7", "0", "0", "0", "1", "2", "2"]


def test_table_csv(capsys):
    code, out, _ = run_cli(capsys, "table", "--max", "3", "--format", "csv")
    assert code == 0
    assert "\r" not in out
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "a", "b", "r3", "H", "H4", "sigma0"]
    assert rows[1] == ["0", "1", "1", "1", "-1/12", "-1/12", ""]
    assert rows[4] == ["3", "8", "8", "8", "1/3", "4/3", "2"]


def test_table_json_column_subset(capsys):
    code, out, _ = run_cli(capsys, "table", "--max", "3",
                           "--columns", "n,a,H", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload[3] == {"n": 3, "a": 8, "H": "1/3"}
    assert payload[0]["H"] == "-1/12"


def test_table_unknown_column(capsys):
    code, _, err = run_cli(capsys, "table", "--columns", "n,zorp")
    assert code == 2
    assert "zorp" in err


def test_bijection_text(capsys):
    code, out, _ = run_cli(capsys, "bijection", "5")
    assert code == 0
    assert "(2,1,1) cat3 -> (2,2,3) cat3" in out
    assert "result: PASS" in out


def test_bijection_triple_preimages(capsys):
    code, out, _ = run_cli(capsys, "bijection", "11", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["n"] == 11
    assert len(payload["triples"]) == 5
    images = [tuple(t["form"]) for t in payload["triples"] if t["case"] == "3b"]
    assert images.count((1, 1, 3)) == 3
    assert payload["summary"]["checks"]


def test_bijection_rejects_0_mod_4(capsys):
    code, _, err = run_cli(capsys, "bijection", "4")
    assert code == 2
    assert "residue" in err
