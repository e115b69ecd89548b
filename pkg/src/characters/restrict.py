import logging
from dataclasses import dataclass

import numpy as np

from ..errors import CharacterError
from ..groups.subgroups import SubgroupHandle
from .catalog import table_for
from .classfunc import ClassFunction
from .table import CharacterTable

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FusionMap:
    handle: SubgroupHandle
    classes: tuple[int, ...]  # subgroup class index -> parent class index

    def __getitem__(self, local_class: int) -> int:
        return self.classes[local_class]


def fusion_map(handle: SubgroupHandle) -> FusionMap:
    parent = handle.parent
    group = handle.group
    members = np.asarray(handle.members, dtype=np.int64)
    fused = []
    for c in group.classes:
        parent_class = int(parent.class_of[members[c.representative]])
        if parent.classes[parent_class].order != c.order:
            raise CharacterError("Fusion of class %s changes the element order" % c.name)
        fused.append(parent_class)
    return FusionMap(handle, tuple(fused))


@dataclass
class Restriction:
    character: ClassFunction
    fusion: FusionMap
    table: CharacterTable
    decomposition: dict[str, int]

    @property
    def label(self) -> str:
        return self.fusion.handle.label

    def degrees(self) -> list[int]:
        """Degrees of the constituents, with multiplicity"""
        out = []
        for name, m in self.decomposition.items():
            out.extend([self.table[name].degree] * m)
        return sorted(out)


def restrict(chi: ClassFunction, handle: SubgroupHandle) -> Restriction:
    """Restrict a character of the parent to a subgroup and decompose it there"""
    if chi.group is not handle.parent:
        raise CharacterError("Character does not live on the subgroup's parent group")
    fusion = fusion_map(handle)
    values = tuple(chi.values[p] for p in fusion.classes)
    local = ClassFunction(handle.group, values)
    table = table_for(handle.group)
    decomposition = table.decompose(local)
    logger.debug("Restricted a degree-%d character to %s: %s", chi.degree, handle.label, decomposition)
    return Restriction(local, fusion, table, decomposition)
