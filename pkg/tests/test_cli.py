"""Command-line surface: formats, exit codes, determinism."""

import csv
import io
import json

import pytest

from staircomp import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_table_contains_the_expected_row(capsys):
    code, out, _ = run(capsys, "table", "--m", "2", "--max-n", "3", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert rows[0] == ["a", "b", "s", "count"]
    assert ["3", "2", "1", "1"] in rows


def test_table_for_unit_pattern(capsys):
    code, out, _ = run(capsys, "table", "--m", "1", "--max-n", "2", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))[1:]
    assert code == 0
    assert rows == [["1", "1", "1", "1"], ["2", "1", "1", "1"], ["2", "2", "2", "1"]]


def test_table_with_an_unreachable_pattern_has_no_occurrences(capsys):
    code, out, _ = run(capsys, "table", "--m", "5", "--max-n", "3", "--format", "json")
    assert code == 0
    assert all(row["s"] == 0 for row in json.loads(out))


def test_json_and_csv_agree(capsys):
    _, json_out, _ = run(capsys, "table", "--m", "2", "--max-n", "6", "--format", "json")
    _, csv_out, _ = run(capsys, "table", "--m", "2", "--max-n", "6", "--format", "csv")
    from_json = {
        (row["a"], row["b"], row["s"], int(row["count"]))
        for row in json.loads(json_out)
    }
    from_csv = {
        (int(a), int(b), int(s), int(c))
        for a, b, s, c in list(csv.reader(io.StringIO(csv_out)))[1:]
    }
    assert from_json == from_csv


def test_output_is_deterministic(capsys):
    first = run(capsys, "table", "--m", "3", "--max-n", "8", "--format", "json")
    second = run(capsys, "table", "--m", "3", "--max-n", "8", "--format", "json")
    assert first == second


def test_table_writes_to_a_file(capsys, tmp_path):
    target = tmp_path / "table.csv"
    code, out, _ = run(
        capsys, "table", "--m", "2", "--max-n", "4",
        "--format", "csv", "--output", str(target),
    )
    assert code == 0
    assert out == ""
    assert target.read_text().startswith("a,b,s,count\n")


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--m", "2", "--max-n", "8")
    assert code == 0
    assert out.count("PASS") == 5
    assert "FAIL" not in out


def test_verify_for_unit_pattern(capsys):
    code, out, _ = run(capsys, "verify", "--m", "1", "--max-n", "8")
    assert code == 0
    assert "5/5 checks passed" in out


def test_verify_reports_mismatches(capsys, monkeypatch):
    monkeypatch.setattr(cli.genfun, "total_staircases", lambda n, parts, m: 0)
    code, out, _ = run(capsys, "verify", "--m", "2", "--max-n", "6")
    assert code == 1
    assert "FAIL window totals" in out
    # The report names the first offending point and both values.
    assert "formula 0 vs enumeration 1" in out


def test_verify_rejects_totals_beyond_the_cap(capsys):
    code, _, err = run(capsys, "verify", "--m", "2", "--max-n", "30")
    assert code == 2
    assert "cap" in err


def test_corollary_prints_the_total(capsys):
    code, out, _ = run(capsys, "corollary", "--n", "4", "--parts", "2", "--m", "2")
    assert code == 0
    assert out == "2\n"


def test_corollary_clamps(capsys):
    code, out, _ = run(capsys, "corollary", "--n", "3", "--parts", "1", "--m", "3")
    assert code == 0
    assert out == "0\n"


def test_corollary_check_agrees(capsys):
    code, out, _ = run(
        capsys, "corollary", "--n", "13", "--parts", "5", "--m", "3", "--check"
    )
    assert code == 0
    assert out == "378\noracle 378\n"


def test_corollary_check_fails_on_mismatch(capsys, monkeypatch):
    monkeypatch.setattr(cli.genfun, "total_staircases", lambda n, parts, m: 99)
    code, out, err = run(
        capsys, "corollary", "--n", "6", "--parts", "2", "--m", "2", "--check"
    )
    assert code == 1
    assert "MISMATCH" in err


def test_oracle_command(capsys):
    code, out, _ = run(capsys, "oracle", "--n", "3", "--m", "2", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0
    assert rows == [
        ["b", "s", "count"],
        ["1", "0", "1"],
        ["2", "0", "1"],
        ["2", "1", "1"],
        ["3", "0", "1"],
    ]


def test_series_dump_schema(capsys):
    code, out, _ = run(capsys, "series-dump", "--m", "1", "--trunc", "4")
    payload = json.loads(out)
    assert code == 0
    assert payload["trunc"] == 4
    keys = [(t["a"], t["b"], t["s"]) for t in payload["terms"]]
    assert keys == sorted(keys)
    assert {"a": 0, "b": 0, "s": 0, "c": "1"} in payload["terms"]
    assert all(isinstance(t["c"], str) for t in payload["terms"])


def test_series_dump_other_kinds(capsys):
    for kind in ("gf-q1", "total-gf", "numerator-det", "denominator-det"):
        code, out, _ = run(capsys, "series-dump", "--m", "2", "--trunc", "6", "--kind", kind)
        assert code == 0
        assert json.loads(out)["trunc"] == 6


def test_usage_errors_exit_with_two(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["table", "--m", "0", "--max-n", "3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["table", "--max-n", "3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["no-such-command"])
    assert exc.value.code == 2


def test_truncation_below_the_table_range_is_rejected(capsys):
    code, _, err = run(capsys, "table", "--m", "2", "--max-n", "10", "--trunc", "5")
    assert code == 2
    assert "--trunc" in err
