"""End-to-end exercises of the catcong command-line interface."""

import csv
import io
import json

import pytest

from catcong.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_list_names_every_family(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0
    for fam in ("MAIN", "M4AB", "MQLS", "M6PT t=1/108 full s"):
        assert fam in out


def test_check_pass_exit_zero(capsys):
    code, out, _ = run(capsys, "check", "MAIN", "--p", "13", "--m", "4", "--t", "2")
    assert code == 0
    assert "pass" in out


def test_check_point_value(capsys):
    code, out, _ = run(capsys, "check", "M4PT t=1/16 full c2k", "--p", "5")
    assert code == 0


def test_check_fraction_parameter(capsys):
    code, _, _ = run(capsys, "check", "TR", "--p", "13", "--c", "1/3")
    assert code == 0


def test_check_all_skipped_exit_two(capsys):
    # c^2 = -3 has a root mod 7 at c = 2
    code, _, _ = run(capsys, "check", "TR", "--p", "7", "--c", "2")
    assert code == 2


def test_check_unknown_theorem_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["check", "BOGUS", "--p", "11"])
    assert exc.value.code == 2


def test_sweep_json_schema(capsys, tmp_path):
    out_path = tmp_path / "report.json"
    code, _, _ = run(
        capsys, "sweep", "--theorem", "TR", "--p-lo", "5", "--p-hi", "40",
        "--samples", "3", "--seed", "4", "--format", "json", "--out", str(out_path),
    )
    assert code == 0
    doc = json.loads(out_path.read_text())
    assert set(doc) == {"meta", "results", "summary"}
    assert set(doc["summary"]) >= {"total", "passed", "skipped", "failed"}
    assert doc["meta"]["seed"] == 4
    assert "version" in doc["meta"]
    assert doc["summary"]["failed"] == 0
    row = doc["results"][0]
    assert {"theorem", "p", "params", "lhs", "rhs", "pass"} <= set(row)


def test_sweep_csv_matches_json_check_set(capsys, tmp_path):
    jpath, cpath = tmp_path / "r.json", tmp_path / "r.csv"
    args = ["sweep", "--theorem", "M3", "--p-lo", "5", "--p-hi", "30",
            "--samples", "3", "--seed", "1"]
    assert main(args + ["--format", "json", "--out", str(jpath)]) == 0
    assert main(args + ["--format", "csv", "--out", str(cpath)]) == 0
    capsys.readouterr()
    doc = json.loads(jpath.read_text())
    rows = list(csv.DictReader(io.StringIO(cpath.read_text())))
    assert len(rows) == len(doc["results"])
    assert [int(r["p"]) for r in rows] == [r["p"] for r in doc["results"]]
    assert all(r["pass"] in {"pass", "fail", "skip"} for r in rows)


def test_sweep_table_to_stdout(capsys):
    code, out, _ = run(capsys, "sweep", "--theorem", "M6PT t=1/108 full s",
                       "--p-lo", "5", "--p-hi", "60")
    assert code == 0
    assert "passed" in out or "pass" in out


def test_seq_values(capsys):
    code, out, _ = run(capsys, "seq", "t", "6")
    assert code == 0
    assert out.split() == ["1", "32", "1792", "122880", "9371648", "763363328"]


def test_seq_s_starts_at_half(capsys):
    code, out, _ = run(capsys, "seq", "s", "2")
    assert code == 0
    assert out.split() == ["1/2", "5", "231"]


def test_classify_partitions_residues(capsys):
    code, out, _ = run(capsys, "classify", "7")
    assert code == 0
    assert "C0" in out and "C1" in out and "C2" in out and "excluded" in out


def test_classify_rejects_multiples_of_three(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["classify", "9"])
    assert exc.value.code == 2


def test_cornacchia_output(capsys):
    code, out, _ = run(capsys, "cornacchia", "13")
    assert code == 0
    assert "L=-5" in out.replace(" ", "") and "M=1" in out.replace(" ", "")


def test_cornacchia_rejects_inert_prime(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["cornacchia", "11"])
    assert exc.value.code == 2
