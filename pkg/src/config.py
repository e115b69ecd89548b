from pathlib import Path

from pydantic_settings import BaseSettings

DATA_DIR = Path(__file__).resolve().parent / "data"


class Settings(BaseSettings):
    # Arithmetic
    working_conductor: int = 28

    # Groups
    group_cap: int = 1000
    subgroup_index_bound: int = 41

    # Groebner
    groebner_primes: str = "31991,65521"  # comma-separated

    # Report
    checks: str = "all"  # "all" or comma-separated check ids
    workers: int = 4
    seed: int = 20240229
    random_cases: int = 200
    archive_path: Path = Path("data/ledger.db")
    archive_runs: bool = True

    # Data
    data_dir: Path = DATA_DIR

    class Config:
        env_file = ".env"
        case_sensitive = False

    @property
    def primes(self) -> list[int]:
        return [int(p) for p in self.groebner_primes.split(",") if p.strip()]

    @property
    def check_selection(self) -> list[str] | None:
        """None means every registered check"""
        if self.checks.strip().lower() == "all":
            return None
        return [c.strip() for c in self.checks.split(",") if c.strip()]

    def data_file(self, name: str) -> Path:
        return self.data_dir / name
