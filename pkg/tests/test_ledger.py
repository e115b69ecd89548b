import asyncio

import pytest

from src.errors import DataFileError, UnknownCheckError
from src.ledger.core import CheckResult, ReportRunner, digest_of, run_report
from src.ledger.registry import FAIL, PASS, REPORTED, Registry, expect, registry
from src.storage.database import Database

REPORTED_IDS = {
    "subgroup-census",
    "sl-subgroup-2s4",
    "a4-w6-restriction",
    "orbit-invariant-profile",
    "conditions-rank-sigma28",
    "castelnuovo",
}
SMALL = ["group-orders", "lemma-sporadic-genera-table", "castelnuovo"]


def _params():
    for check_id in registry.ids():
        marks = [pytest.mark.slow] if registry[check_id].slow else []
        yield pytest.param(check_id, marks=marks, id=check_id)


def test_catalog_size():
    assert len(registry) >= 50
    assert {"appendix-b-orthogonality", "lemma-sporadic-genera-table"} <= set(registry.ids())
    assert REPORTED_IDS <= set(registry.ids())


def test_registry_rejects_duplicates_and_unknown_ids():
    local = Registry()
    local.check("one", "a check")(lambda wb: expect(True))
    with pytest.raises(ValueError):
        local.check("one", "again")(lambda wb: expect(True))
    with pytest.raises(UnknownCheckError) as info:
        local.select(["one", "two"])
    assert info.value.unknown == ["two"]
    assert [c.id for c in local.select(None)] == ["one"]


@pytest.mark.parametrize("check_id", list(_params()))
def test_check_outcome(workbench, check_id):
    outcome = registry[check_id].run(workbench)
    expected = REPORTED if check_id in REPORTED_IDS else PASS
    assert outcome.status == expected, outcome.payload


def test_digest_ignores_timing():
    a = CheckResult(id="x", status=PASS, payload={"n": 1}, wall_time=0.5)
    b = CheckResult(id="x", status=PASS, payload={"n": 1}, wall_time=9.0)
    assert digest_of([a]) == digest_of([b])
    assert digest_of([a]) != digest_of([CheckResult(id="x", status=PASS, payload={"n": 2})])


def test_runner_archives_stable_digests(settings, tmp_path):
    db = Database(tmp_path / "runs.db")
    runner = ReportRunner(settings, db)
    first = asyncio.run(runner.run(SMALL))
    second = asyncio.run(runner.run(list(reversed(SMALL))))
    assert first.exit_code == 0
    assert [r.id for r in first.results] == sorted(SMALL)
    assert first.selection == ",".join(sorted(SMALL))
    assert first.digest == second.digest
    assert first.counts == {PASS: 2, FAIL: 0, REPORTED: 1}
    last = db.last_run(first.selection)
    assert last.check_count == 3
    assert last.digest == first.digest


def test_runner_turns_exceptions_into_failures(settings):
    local = Registry()

    @local.check("boom", "raises")
    def boom(wb):
        raise RuntimeError("no luck")

    local.check("fine", "passes")(lambda wb: expect(True, value=1))
    report = asyncio.run(ReportRunner(settings, catalog=local).run())
    assert report.exit_code == 1
    assert report.selection == "all"
    by_id = {r.id: r for r in report.results}
    assert by_id["boom"].status == FAIL
    assert "RuntimeError" in by_id["boom"].payload["error"]
    assert by_id["fine"].payload == {"value": 1}


def test_fast_selection_skips_slow_checks(settings):
    local = Registry()
    local.check("quick", "fast")(lambda wb: expect(True))
    local.check("heavy", "slow", slow=True)(lambda wb: expect(True))
    report = asyncio.run(ReportRunner(settings, catalog=local).run(include_slow=False))
    assert report.selection == "fast"
    assert [r.id for r in report.results] == ["quick"]


def test_unknown_ids_fail_before_running(settings):
    with pytest.raises(UnknownCheckError):
        asyncio.run(ReportRunner(settings).run(["group-orders", "no-such-check"]))


def test_run_report_archives_when_enabled(settings, tmp_path):
    local = settings.model_copy(update={"archive_path": tmp_path / "runs.db", "archive_runs": True})
    report = run_report(["group-orders"], local)
    assert report.exit_code == 0
    assert Database(local.archive_path).last_run("group-orders").digest == report.digest


def test_missing_data_file_is_an_input_error(settings, tmp_path):
    local = settings.model_copy(update={"data_dir": tmp_path / "nowhere", "archive_runs": False})
    with pytest.raises(DataFileError):
        run_report(["group-orders"], local)


def test_malformed_data_file_is_an_input_error(settings, tmp_path):
    for name in ("gen_sl27_p3.mat", "gen_psl27_p2.mat", "klein_xy3_p2.mat"):
        (tmp_path / name).write_text("@matrix g1\n1; 2\n3\n", encoding="utf-8")
    local = settings.model_copy(update={"data_dir": tmp_path, "archive_runs": False})
    with pytest.raises(DataFileError):
        asyncio.run(ReportRunner(local).run(["group-orders"]))
