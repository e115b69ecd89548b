import json

import pytest

from src.main import main


@pytest.fixture(autouse=True)
def no_archive(monkeypatch):
    monkeypatch.setenv("ARCHIVE_RUNS", "false")


def test_rh_json(capsys):
    assert main(["rh", "--json", "--gmax", "30"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data["rows"]) == 11
    assert data["rows"][0]["g"] == 3


def test_rh_table(capsys):
    assert main(["rh", "--format", "table", "--gmax", "10"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].split() == ["g", "24", "42", "56", "84"]
    assert len(lines) == 4


def test_decompose(capsys):
    assert main(["decompose", "--char", "sym(W3,2)", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["decomposition"] == {"W6": 1}


def test_group_info(capsys):
    assert main(["group-info", "--group", "cover", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["order"] == 336
    assert len(data["classes"]) == 11


def test_catalecticant(capsys):
    assert main(["catalecticant", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["rank"] == 6
    assert data["degenerate"] is False


def test_hexagon(capsys):
    assert main(["hexagon", "--case", "final", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["status"] == "inconsistent"


def test_smooth_from_file(tmp_path, capsys):
    poly = tmp_path / "cone.txt"
    poly.write_text("# a cone\nx1^2 + x2^2 - x3^2\n", encoding="utf-8")
    assert main(["smooth", "--poly", str(poly), "--nvars", "4", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["smooth"] is False


def test_report_to_file(tmp_path):
    out = tmp_path / "report.json"
    assert main(["report", "--checks", "group-orders,castelnuovo", "--output", str(out)]) == 0
    report = json.loads(out.read_text(encoding="utf-8"))
    assert report["exit_code"] == 0
    assert [r["id"] for r in report["results"]] == ["castelnuovo", "group-orders"]


def test_unknown_check_is_a_usage_error():
    assert main(["report", "--checks", "no-such-check"]) == 2


def test_missing_config_file(tmp_path):
    assert main(["rh", "--config", str(tmp_path / "missing.env")]) == 2


def test_missing_input_file(tmp_path):
    assert main(["smooth", "--poly", str(tmp_path / "missing.txt")]) == 2


def test_missing_data_dir_is_a_usage_error(tmp_path, monkeypatch):
    monkeypatch.setenv("DATA_DIR", str(tmp_path / "nowhere"))
    assert main(["report", "--checks", "group-orders"]) == 2


def test_seed_makes_reports_reproducible(tmp_path):
    payloads = []
    for run in range(2):
        out = tmp_path / ("seeded-%d.json" % run)
        args = ["report", "--checks", "cyclotomic-ring-axioms", "--seed", "7", "--output", str(out)]
        assert main(args) == 0
        payloads.append(json.loads(out.read_text(encoding="utf-8"))["results"][0]["payload"])
    assert payloads[0] == payloads[1]
    assert payloads[0]["seed"] == 7
    assert payloads[0]["failures"] == 0
