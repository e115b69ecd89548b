import asyncio
import hashlib
import json
import logging
import time
from datetime import datetime, timezone
from typing import Any, Iterable

from pydantic import BaseModel, Field

from ..config import Settings
from ..storage.database import Database, ResultRow
from . import checks  # noqa: F401  (registers every check)
from .registry import FAIL, PASS, REPORTED, Check, Registry, registry
from .workbench import Workbench

logger = logging.getLogger(__name__)


class CheckResult(BaseModel):
    id: str
    status: str
    payload: dict[str, Any] = Field(default_factory=dict)
    wall_time: float = 0.0
    anchor: str = ""

    def canonical(self) -> str:
        """Everything except timing, as stable JSON"""
        return json.dumps(self.model_dump(exclude={"wall_time"}), sort_keys=True, separators=(",", ":"))


class Report(BaseModel):
    started_at: str
    selection: str
    results: list[CheckResult]
    exit_code: int
    digest: str

    @property
    def counts(self) -> dict[str, int]:
        return {s: sum(1 for r in self.results if r.status == s) for s in (PASS, FAIL, REPORTED)}


def digest_of(results: Iterable[CheckResult]) -> str:
    h = hashlib.sha256()
    for r in results:
        h.update(r.canonical().encode())
        h.update(b"\n")
    return h.hexdigest()


class ReportRunner:
    def __init__(self, settings: Settings, db: Database | None = None, catalog: Registry = registry):
        self.settings = settings
        self.db = db
        self.catalog = catalog
        self.workbench = Workbench(settings)

    async def run(self, ids: list[str] | None = None, include_slow: bool = True) -> Report:
        """Run the selected checks in the worker pool; unknown ids raise before anything runs"""
        selected = self.catalog.select(ids)
        if ids is None and not include_slow:
            selected = [c for c in selected if not c.slow]
        if ids is None:
            selection = "all" if include_slow else "fast"
        else:
            selection = ",".join(c.id for c in selected)
        started_at = datetime.now(timezone.utc).isoformat(timespec="seconds")
        # a bad data file is an input error, not a failed check
        self.workbench.check_data_files()
        logger.info("Running %d checks with %d workers", len(selected), self.settings.workers)

        slots = asyncio.Semaphore(max(1, self.settings.workers))
        results = await asyncio.gather(*(self._run_one(c, slots) for c in selected))
        results = sorted(results, key=lambda r: r.id)
        exit_code = 1 if any(r.status == FAIL for r in results) else 0
        report = Report(
            started_at=started_at,
            selection=selection,
            results=results,
            exit_code=exit_code,
            digest=digest_of(results),
        )
        logger.info("Report done: %s", report.counts)
        if self.db is not None:
            self._archive(report)
        return report

    async def _run_one(self, check: Check, slots: asyncio.Semaphore) -> CheckResult:
        async with slots:
            logger.info("Check %s: started", check.id)
            start = time.perf_counter()
            try:
                outcome = await asyncio.to_thread(check.run, self.workbench)
                status, payload = outcome.status, outcome.payload
            except Exception as e:
                logger.exception("Check %s raised: %s", check.id, e)
                status, payload = FAIL, {"error": "%s: %s" % (type(e).__name__, e)}
            elapsed = time.perf_counter() - start
            logger.info("Check %s: %s in %.2fs", check.id, status, elapsed)
            return CheckResult(id=check.id, status=status, payload=payload,
                               wall_time=round(elapsed, 3), anchor=check.anchor)

    def _archive(self, report: Report):
        previous = self.db.previous_digest(report.selection)
        if previous is not None and previous != report.digest:
            logger.warning("Report digest %s differs from the previous run (%s)", report.digest[:12], previous[:12])
        rows = [
            ResultRow(r.id, r.status, hashlib.sha256(r.canonical().encode()).hexdigest())
            for r in report.results
        ]
        self.db.record_run(report.started_at, report.selection, report.digest, report.exit_code, rows)


def run_report(ids: list[str] | None, settings: Settings, include_slow: bool = True) -> Report:
    db = Database(settings.archive_path) if settings.archive_runs else None
    return asyncio.run(ReportRunner(settings, db).run(ids, include_slow))
