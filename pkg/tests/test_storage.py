from src.storage.database import Database, ResultRow


def test_empty_archive(tmp_path):
    db = Database(tmp_path / "nested" / "ledger.db")
    assert db.path.exists()
    assert db.last_run("all") is None
    assert db.previous_digest("all") is None


def test_runs_and_results(tmp_path):
    db = Database(tmp_path / "ledger.db")
    rows = [ResultRow("b-check", "pass", "d2"), ResultRow("a-check", "reported", "d1")]
    first = db.record_run("2024-01-01T00:00:00+00:00", "all", "digest-1", 0, rows)
    second = db.record_run("2024-01-02T00:00:00+00:00", "all", "digest-2", 1, rows[:1])
    db.record_run("2024-01-03T00:00:00+00:00", "fast", "digest-3", 0, [])

    assert second > first
    last = db.last_run("all")
    assert last.run_id == second
    assert last.exit_code == 1
    assert last.check_count == 1
    assert db.previous_digest("all") == "digest-2"
    assert db.previous_digest("fast") == "digest-3"
    assert [r.check_id for r in db.results_for(first)] == ["a-check", "b-check"]


def test_archive_survives_reopening(tmp_path):
    path = tmp_path / "ledger.db"
    Database(path).record_run("2024-01-01T00:00:00+00:00", "all", "digest", 0, [])
    assert Database(path).previous_digest("all") == "digest"
