"""Shared, lazily built objects for the checks: groups, tables, invariants, orbits."""
import logging
import threading
import time
from typing import Any, Callable

from ..characters.table import CharacterTable, CoverTables, build_psl_table, build_sl_table
from ..config import Settings
from ..geometry.orbits import SpecialOrbits, special_orbits_p3
from ..groups.standard import DATA_FILES, StandardGroups, standard_groups
from ..groups.subgroups import SubgroupHandle, all_subgroup_classes, preimage_in_cover
from ..invariants.action import ReynoldsOperator
from ..invariants.klein import InvariantCatalog, build_klein_invariants
from ..linalg.io import load_matrices

logger = logging.getLogger(__name__)


class Workbench:
    """Every object is built once, on first use, under one re-entrant lock"""

    def __init__(self, settings: Settings):
        self.settings = settings
        self._lock = threading.RLock()
        self._cache: dict[str, Any] = {}

    def _get(self, key: str, build: Callable[[], Any]) -> Any:
        with self._lock:
            if key not in self._cache:
                start = time.perf_counter()
                self._cache[key] = build()
                logger.info("Built %s in %.2fs", key, time.perf_counter() - start)
            return self._cache[key]

    def check_data_files(self):
        """Parse every bundled generator file; raises DataFileError on the first bad one"""
        for name in DATA_FILES:
            matrices = load_matrices(self.settings.data_file(name))
            logger.debug("%s: %d matrices", name, len(matrices))

    @property
    def groups(self) -> StandardGroups:
        return self._get("groups", lambda: standard_groups(self.settings.data_dir, self.settings.group_cap))

    @property
    def psl_table(self) -> CharacterTable:
        """On the plane group"""
        return self._get("psl_table", lambda: build_psl_table(self.groups.plane))

    @property
    def cover_tables(self) -> CoverTables:
        return self._get("cover_tables", lambda: build_sl_table(self.psl_table, self.groups.space))

    @property
    def invariants(self) -> InvariantCatalog:
        # invariance itself is a check of its own
        return self._get("invariants", lambda: build_klein_invariants(self.settings.data_dir, verify=False))

    @property
    def reynolds(self) -> ReynoldsOperator:
        return self._get("reynolds", lambda: ReynoldsOperator(self.groups.cover))

    @property
    def special_orbits(self) -> SpecialOrbits:
        return self._get(
            "special_orbits", lambda: special_orbits_p3(self.groups.space, self.settings.subgroup_index_bound)
        )

    def subgroup_classes(self, which: str) -> list[SubgroupHandle]:
        """Conjugacy classes of subgroups of the 'space' or 'plane' group"""
        group = getattr(self.groups, which)
        return self._get("subgroups_" + which, lambda: all_subgroup_classes(group))

    def subgroup(self, which: str, label: str) -> SubgroupHandle:
        """First class of subgroups with this isomorphism type"""
        for handle in self.subgroup_classes(which):
            if handle.label == label:
                return handle
        raise LookupError("No subgroup of type %s in the %s group" % (label, which))

    def cover_subgroup(self, label: str) -> SubgroupHandle:
        """Full preimage in the cover of a subgroup of the space group"""
        return self._get(
            "preimage_" + label, lambda: preimage_in_cover(self.groups.space, self.subgroup("space", label)).full
        )
