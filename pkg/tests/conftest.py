import random

import pytest

from src.config import Settings
from src.ledger.workbench import Workbench

SEED = 20240229


@pytest.fixture(scope="session")
def settings(tmp_path_factory) -> Settings:
    return Settings(archive_path=tmp_path_factory.mktemp("archive") / "ledger.db", random_cases=40)


@pytest.fixture(scope="session")
def workbench(settings) -> Workbench:
    return Workbench(settings)


@pytest.fixture(scope="session")
def groups(workbench):
    return workbench.groups


@pytest.fixture(scope="session")
def psl_table(workbench):
    return workbench.psl_table


@pytest.fixture(scope="session")
def cover_tables(workbench):
    return workbench.cover_tables


@pytest.fixture(scope="session")
def catalog(workbench):
    return workbench.invariants


@pytest.fixture
def rng() -> random.Random:
    return random.Random(SEED)
