import json

import pytest

from hilbq.cli import build_parser, main


def test_unknown_suite_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "performance"])
    assert exc.value.code == 2


def test_emit_constants(tmp_path):
    out = tmp_path / "b.json"
    assert main(["emit", "constants", "--imax", "7", "--jmax", "4",
        "--out", str(out)]) == 0
    rows = json.loads(out.read_text())
    assert {"family": "b", "i": 5, "j": 0, "value": "2/5",
        "provenance": "computed"} in rows


def test_emit_is_deterministic(tmp_path):
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for p in paths:
        main(["emit", "theta", "--k", "2", "--alpha", "point", "--qmax", "6",
            "--format", "csv", "--out", str(p)])
    assert paths[0].read_bytes() == paths[1].read_bytes()
    assert paths[0].read_text().startswith("q,z,c\n")


def test_emit_series_inadmissible(capsys):
    code = main(["emit", "series", "--chk", "2", "--L", "L1",
        "--surface", "kpos", "--qmax", "3"])
    assert code == 1
    assert "g_1,lambda" in capsys.readouterr().err


def test_emit_series_needs_matching_lines(capsys):
    assert main(["emit", "series", "--chk", "1", "--chk", "2",
        "--L", "L1"]) == 1


def test_unreadable_model_file(tmp_path, capsys):
    code = main(["verify", "--suite", "constants", "--models",
        str(tmp_path / "absent.json")])
    assert code == 1
    assert "Cannot read model file" in capsys.readouterr().err


@pytest.mark.slow
def test_verify_constants(tmp_path):
    out = tmp_path / "report.json"
    assert main(["verify", "--suite", "constants", "--qmax", "4",
        "--models", "minimal", "--out", str(out)]) == 0
    reports = json.loads(out.read_text())
    assert {r["identity"] for r in reports} >= {"b-catalan", "b-even-rows"}
    assert all(r["status"] == "pass" for r in reports)


def test_verbose_flag_counts():
    args = build_parser().parse_args(["-vv", "emit", "constants"])
    assert args.verbose == 2
