import logging
import sqlite3
from pathlib import Path
from contextlib import contextmanager
from dataclasses import dataclass

DB_PATH = Path("data/ledger.db")
logger = logging.getLogger(__name__)


@dataclass
class RunRecord:
    run_id: int
    started_at: str
    selection: str
    digest: str
    check_count: int
    exit_code: int


@dataclass
class ResultRow:
    check_id: str
    status: str
    payload_digest: str


class Database:
    """Archive of report runs: one row per run, one per check result"""

    def __init__(self, path: Path = DB_PATH):
        self.path = Path(path)
        self.path.parent.mkdir(parents=True, exist_ok=True)
        db_existed = self.path.exists()
        self._init_db()

        with self._conn() as conn:
            run_count = conn.execute("SELECT COUNT(*) FROM runs").fetchone()[0]
            result_count = conn.execute("SELECT COUNT(*) FROM results").fetchone()[0]

        logger.info(
            "Archive initialized: path=%s, existed=%s, runs=%d, results=%d",
            self.path.resolve(), db_existed, run_count, result_count
        )

    @contextmanager
    def _conn(self):
        conn = sqlite3.connect(self.path)
        conn.row_factory = sqlite3.Row
        try:
            yield conn
            conn.commit()
        finally:
            conn.close()

    def _init_db(self):
        with self._conn() as conn:
            conn.executescript("""
                CREATE TABLE IF NOT EXISTS runs (
                    id INTEGER PRIMARY KEY,
                    started_at TEXT NOT NULL,
                    selection TEXT NOT NULL,
                    digest TEXT NOT NULL,
                    check_count INTEGER NOT NULL,
                    exit_code INTEGER NOT NULL
                );
                CREATE INDEX IF NOT EXISTS idx_runs_selection
                    ON runs(selection, id);

                CREATE TABLE IF NOT EXISTS results (
                    run_id INTEGER NOT NULL REFERENCES runs(id),
                    check_id TEXT NOT NULL,
                    status TEXT NOT NULL,
                    payload_digest TEXT NOT NULL,
                    PRIMARY KEY (run_id, check_id)
                );
            """)

    def record_run(self, started_at: str, selection: str, digest: str, exit_code: int,
                   results: list[ResultRow]) -> int:
        with self._conn() as conn:
            cursor = conn.execute("""
                INSERT INTO runs (started_at, selection, digest, check_count, exit_code)
                VALUES (?, ?, ?, ?, ?)
            """, (started_at, selection, digest, len(results), exit_code))
            run_id = cursor.lastrowid
            conn.executemany(
                "INSERT INTO results (run_id, check_id, status, payload_digest) VALUES (?, ?, ?, ?)",
                [(run_id, r.check_id, r.status, r.payload_digest) for r in results]
            )
        logger.info("Archived run %d: %d results, digest %s", run_id, len(results), digest[:12])
        return run_id

    def last_run(self, selection: str) -> RunRecord | None:
        with self._conn() as conn:
            row = conn.execute("""
                SELECT * FROM runs WHERE selection = ?
                ORDER BY id DESC LIMIT 1
            """, (selection,)).fetchone()
            if row:
                return RunRecord(
                    run_id=row["id"],
                    started_at=row["started_at"],
                    selection=row["selection"],
                    digest=row["digest"],
                    check_count=row["check_count"],
                    exit_code=row["exit_code"]
                )
            return None

    def previous_digest(self, selection: str) -> str | None:
        run = self.last_run(selection)
        return run.digest if run else None

    def results_for(self, run_id: int) -> list[ResultRow]:
        with self._conn() as conn:
            rows = conn.execute(
                "SELECT check_id, status, payload_digest FROM results WHERE run_id = ? ORDER BY check_id",
                (run_id,)
            ).fetchall()
            return [ResultRow(r["check_id"], r["status"], r["payload_digest"]) for r in rows]
