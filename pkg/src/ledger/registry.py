"""Check registry: checks register themselves with a decorator and are selected by id."""
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, TYPE_CHECKING

from ..errors import UnknownCheckError

if TYPE_CHECKING:
    from .workbench import Workbench

logger = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"
REPORTED = "reported"


@dataclass
class Outcome:
    status: str
    payload: dict[str, Any] = field(default_factory=dict)


def expect(condition: bool, **payload) -> Outcome:
    return Outcome(PASS if condition else FAIL, payload)


def reported(**payload) -> Outcome:
    """For values with no expected target"""
    return Outcome(REPORTED, payload)


@dataclass(frozen=True)
class Check:
    id: str
    anchor: str
    run: Callable[["Workbench"], Outcome]
    slow: bool = False


class Registry:
    def __init__(self):
        self._checks: dict[str, Check] = {}

    def check(self, check_id: str, anchor: str, slow: bool = False):
        def decorator(fn: Callable[["Workbench"], Outcome]):
            if check_id in self._checks:
                raise ValueError("Duplicate check id %r" % check_id)
            self._checks[check_id] = Check(check_id, anchor, fn, slow)
            return fn
        return decorator

    def ids(self) -> list[str]:
        return sorted(self._checks)

    def __len__(self) -> int:
        return len(self._checks)

    def __getitem__(self, check_id: str) -> Check:
        return self._checks[check_id]

    def select(self, ids: Iterable[str] | None = None) -> list[Check]:
        """Checks sorted by id; None selects everything"""
        if ids is None:
            return [self._checks[i] for i in self.ids()]
        ids = list(dict.fromkeys(ids))
        unknown = [i for i in ids if i not in self._checks]
        if unknown:
            raise UnknownCheckError(unknown)
        return [self._checks[i] for i in sorted(ids)]


registry = Registry()
