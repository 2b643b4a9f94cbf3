"""Command-line surface: subcommand flows and exit codes."""

import json

import pytest

from sjb.cli import main
from sjb.serialize import load, save, serialize
from sjb.jordan import build_sjb
from sjb.scd import build_scd


def test_build_then_verify_sjb(tmp_path, capsys):
    out = tmp_path / "b.json"
    assert main(["build", "--n", "2", "--kind", "sjb", "--out", str(out)]) == 0
    assert load(out) == build_sjb(2)
    assert main(["verify", str(out)]) == 0
    text = capsys.readouterr().out
    assert "overall: PASS" in text


def test_build_then_verify_scd(tmp_path, capsys):
    out = tmp_path / "d.json"
    assert main(["build", "--n", "4", "--kind", "scd", "--out", str(out)]) == 0
    assert load(out) == build_scd(4)
    assert main(["verify", str(out)]) == 0
    assert "scd n=4" in capsys.readouterr().out


def test_verify_selected_checks(tmp_path, capsys):
    out = tmp_path / "b.json"
    save(build_sjb(3), out)
    assert main(["verify", str(out), "--checks", "ortho,ratios"]) == 0
    text = capsys.readouterr().out
    assert "orthogonality" in text and "ratio uniformity" in text
    assert "full_rank" not in text


def test_verify_tampered_file_exits_1(tmp_path, capsys):
    out = tmp_path / "t.json"
    save(build_sjb(3), out)
    doc = json.loads(out.read_text())
    doc["chains"][0]["vectors"][1][0]["coeff"] = "7"
    out.write_text(json.dumps(doc))
    assert main(["verify", str(out)]) == 1
    text = capsys.readouterr().out
    assert "FAIL" in text and "witness" in text


def test_verify_malformed_file_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"format_version": "1", "kind": "sjb", "n": 1, "chains": [')
    assert main(["verify", str(bad)]) == 2
    assert "error" in capsys.readouterr().err


def test_verify_missing_file_exits_2(tmp_path, capsys):
    assert main(["verify", str(tmp_path / "nope.json")]) == 2


def test_usage_errors_exit_2(capsys):
    assert main([]) == 2
    assert main(["build", "--n", "2"]) == 2  # missing --out
    assert main(["frobnicate"]) == 2
    capsys.readouterr()


def test_help_exits_0(capsys):
    assert main(["--help"]) == 0
    assert "symmetric" in capsys.readouterr().out.lower()


def test_build_over_cap_exits_2(tmp_path, capsys):
    out = tmp_path / "x.json"
    assert main(["build", "--n", "30", "--out", str(out)]) == 2
    assert "error" in capsys.readouterr().err
    assert main(["build", "--n", "9", "--cap", "8", "--out", str(out)]) == 2
    capsys.readouterr()


def test_rank_table(capsys):
    assert main(["rank", "--n", "2"]) == 0
    text = capsys.readouterr().out
    lines = [line.split() for line in text.splitlines()]
    assert lines[1] == ["0", "1", "2", "1", "true", "false"]
    assert lines[2] == ["1", "2", "1", "1", "false", "true"]
    assert "PASS" in text


def test_rank_single_level_and_errors(capsys):
    assert main(["rank", "--n", "5", "--k", "2"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[1].split() == ["2", "10", "10", "10", "true", "true"]
    assert main(["rank", "--n", "5", "--k", "5"]) == 2
    assert main(["rank", "--n", "0"]) == 2
    capsys.readouterr()


def test_rank_parallel_matches_serial(capsys):
    assert main(["rank", "--n", "6", "--jobs", "2"]) == 0
    par = capsys.readouterr().out
    assert main(["rank", "--n", "6"]) == 0
    ser = capsys.readouterr().out
    assert par == ser


def test_profile_command(tmp_path, capsys):
    out = tmp_path / "b.json"
    save(build_sjb(4), out)
    assert main(["profile", str(out)]) == 0
    text = capsys.readouterr().out
    assert "start_rank 0" in text and "PASS" in text


def test_profile_rejects_scd(tmp_path, capsys):
    out = tmp_path / "d.json"
    save(build_scd(3), out)
    assert main(["profile", str(out)]) == 2
    capsys.readouterr()


def test_compare_command(capsys):
    assert main(["compare", "--n", "6"]) == 0
    text = capsys.readouterr().out
    assert "multisets: PASS" in text and "chain by chain: PASS" in text


def test_stats_command(capsys):
    assert main(["stats", "--n", "4"]) == 0
    text = capsys.readouterr().out
    assert "total subsets: 16" in text
    assert "total chains:  6" in text


def test_export_matrix_command(tmp_path, capsys):
    out = tmp_path / "m.csv"
    assert main(["export-matrix", "--n", "3", "--k", "1", "--out", str(out)]) == 0
    assert len(out.read_text().splitlines()) == 4
    assert main(["export-matrix", "--n", "3", "--k", "3", "--out", str(out)]) == 2
    capsys.readouterr()


def test_build_all_levels(tmp_path):
    template = str(tmp_path / "level_{n}.json")
    assert main(["build", "--n", "3", "--all-levels", "--out", template]) == 0
    for n in range(4):
        assert load(tmp_path / f"level_{n}.json") == build_sjb(n)
    assert main(["build", "--n", "3", "--all-levels", "--out",
                 str(tmp_path / "flat.json")]) == 2


def test_build_all_levels_scd(tmp_path):
    template = str(tmp_path / "scd_{n}.json")
    assert main(["build", "--n", "2", "--kind", "scd", "--all-levels",
                 "--out", template]) == 0
    assert load(tmp_path / "scd_2.json") == build_scd(2)


def test_scd_verify_rejects_checks_flag(tmp_path, capsys):
    out = tmp_path / "d.json"
    save(build_scd(2), out)
    assert main(["verify", str(out), "--checks", "ortho"]) == 2
    capsys.readouterr()


def test_verify_unknown_check_exits_2(tmp_path, capsys):
    out = tmp_path / "b.json"
    save(build_sjb(2), out)
    assert main(["verify", str(out), "--checks", "bogus"]) == 2
    capsys.readouterr()


def test_documents_identical_across_calls(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["build", "--n", "6", "--out", str(a)]) == 0
    assert main(["build", "--n", "6", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert a.read_bytes() == serialize(build_sjb(6))
