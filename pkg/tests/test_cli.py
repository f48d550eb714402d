import json

import pytest

from permbinom.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_verify_f2(capsys):
    code, out = run(capsys, "verify", "--case", "f2", "--base-n", "2")
    assert code == 0
    assert "verified" in out.out


def test_verify_writes_json(capsys, tmp_path):
    path = tmp_path / "v.json"
    code, _ = run(capsys, "verify", "--case", "f1", "--base-n", "3", "--out", str(path))
    doc = json.loads(path.read_text())
    assert code == 0
    assert doc["validation"]["case"] == "F1_Q2"
    assert doc["rows"][0]["i"] == 43


def test_verify_discrepancy_exit(capsys, monkeypatch):
    import permbinom.cli as cli
    from permbinom.theorems import validate as real

    def broken(case, tester=None):
        rep = real(case, tester)
        rep.discrepancies = [1]
        return rep
    monkeypatch.setattr(cli, "validate", broken)
    code, out = run(capsys, "verify", "--case", "f2", "--base-n", "2")
    assert code == 1 and "DISCREPANCY" in out.out


def test_index(capsys):
    code, out = run(capsys, "index", "--n", "12", "--i", "1846")
    assert code == 0
    assert "index 91" in out.out


def test_search_gf16_nonlinearized(capsys):
    code, out = run(capsys, "search", "--n", "4", "--skip-linearized")
    assert code == 0
    assert "0 rows" in out.out


def test_search_table1(capsys, tmp_path):
    path = tmp_path / "t1.csv"
    code, _ = run(capsys, "search", "--n", "6", "--skip-linearized",
                  "--out", str(path), "--format", "csv")
    lines = path.read_text().splitlines()
    assert code == 0
    assert lines[0].startswith("# field n=6")
    assert [ln.split(",")[1] for ln in lines[2:]] == ["10", "19", "22", "43"]


def test_search_range_and_tester(capsys):
    code, out = run(capsys, "search", "--n", "6", "--i", "40-45", "--tester", "cross-check")
    assert code == 0 and "1 rows" in out.out


def test_hermite_and_test(capsys):
    code, out = run(capsys, "hermite", "--n", "6", "--i", "10", "--a", "0x2", "--t", "27")
    assert code == 0 and "coefficient 0x" in out.out
    code, out = run(capsys, "hermite", "--n", "6", "--i", "10", "--a", "0x2")
    assert code == 0 and "is_pp_hermite False" in out.out
    code, out = run(capsys, "test", "--n", "6", "--i", "22", "--a", "0x1")
    assert code == 0 and "direct False" in out.out


@pytest.mark.parametrize("argv", [
    ["search"],
    ["search", "--n", "6", "--bogus"],
    ["test", "--n", "6", "--i", "10", "--a", "12"],
    ["test", "--n", "6", "--i", "10", "--a", "0xzz"],
    ["test", "--n", "6", "--i", "10", "--a", "0x100"],
    ["test", "--n", "6", "--i", "1", "--a", "0x2"],
    ["index", "--n", "20", "--i", "3"],
    ["hermite", "--n", "6", "--i", "10", "--a", "0x2", "--t", "99"],
    ["verify", "--case", "f1", "--base-n", "4"],
    ["search", "--n", "12", "--tester", "hermite"],
    ["search", "--n", "6", "--i", "1-5"],
])
def test_usage_errors(capsys, argv):
    code, _ = run(capsys, *argv)
    assert code == 2
