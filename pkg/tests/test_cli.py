import json

import pytest

from wittlift.checks import run_checks
from wittlift.cli import centralizer_entry, jordan_entry, main, obstruct_entry
from wittlift.report import markdown_digest, report_dicts, write_json, write_markdown


def test_verify_list(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert len(out) == 50
    assert all(line.startswith("C-") for line in out)


def test_verify_run_filter_and_reports(tmp_path, capsys):
    json_path = tmp_path / "out" / "report.json"
    md_path = tmp_path / "out" / "report.md"
    code = main(
        ["run", "--filter", "C-witt-laws-f2", "--json", str(json_path), "--md", str(md_path)]
    )
    assert code == 0
    records = json.loads(json_path.read_text())
    assert [r["id"] for r in records] == ["C-witt-laws-f2"]
    assert records[0]["status"] == "pass"
    assert md_path.read_text().startswith("# Verification report")
    # delimited table and figures land next to the JSON report
    assert (tmp_path / "out" / "report.csv").exists()
    assert (tmp_path / "out" / "report-status.png").exists()
    assert (tmp_path / "out" / "report-timings.png").exists()


def test_verify_unknown_filter_is_config_error():
    assert main(["run", "--filter", "no-such-*"]) == 2


def test_obstruct_nonsplit(capsys):
    code = obstruct_entry(
        ["--field", "2^2", "--n", "2", "--variant", "glift",
         "--rho", "1,x;0,1", "--mu", "1,x+1;0,1"]
    )
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["cocycle_valid"] is True
    assert payload["splits"] is False
    assert payload["orders"] == [2, 2]
    assert "certificate" in payload


def test_obstruct_split_single_generator(capsys):
    code = obstruct_entry(
        ["--field", "2^1", "--n", "2", "--rho", "1,1;0,1", "--mu", "1,0;0,1"]
    )
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["splits"] is True
    assert "witness" in payload


def test_centralizer_output(capsys):
    code = centralizer_entry(["--field", "2^1", "--matrix", "0,1;0,0"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["order"] == 2


def test_jordan_output(capsys):
    code = jordan_entry(["--field", "2^1", "--matrix", "1,1,0;0,1,0;0,0,1"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["blocks"] == [["1", 2], ["1", 1]]


def test_bad_matrix_is_config_error(capsys):
    assert centralizer_entry(["--field", "2^1", "--matrix", "0,1;0"]) == 2
    assert "error:" in capsys.readouterr().err


def test_report_determinism_modulo_timing():
    a = report_dicts(run_checks(filter_glob="C-witt-laws-f2"))
    b = report_dicts(run_checks(filter_glob="C-witt-laws-f2"))
    for rec in a + b:
        rec.pop("ms")
    assert a == b


def test_markdown_digest_lists_failures_section_only_on_fail():
    reports = run_checks(filter_glob="C-witt-laws-f2")
    digest = markdown_digest(reports)
    assert "## Failures" not in digest
    assert "| C-witt-laws-f2 | pass |" in digest
