import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from ..errors import ArgumentError, NotASubgroupError
from .group import FiniteMatrixGroup, closure
from .isomorphism import classify

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class SubgroupHandle:
    parent: FiniteMatrixGroup
    members: tuple[int, ...]  # sorted parent ids
    generators: tuple[int, ...]  # parent ids
    class_size: int = 1  # number of conjugates in the parent
    _label: str | None = field(default=None, repr=False)

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    @cached_property
    def group(self) -> FiniteMatrixGroup:
        """The subgroup as a group in its own right; local id i is members[i]"""
        elements, mul = self.parent.subgroup_table(self.members)
        position = {m: i for i, m in enumerate(self.members)}
        return FiniteMatrixGroup.from_table(
            elements, mul, [position[g] for g in self.generators], projective=self.parent.projective
        )

    @property
    def label(self) -> str:
        if self._label is None:
            self._label = classify(self.group)
        return self._label

    def to_parent(self, local: int) -> int:
        return self.members[local]

    def __contains__(self, g: int) -> bool:
        return g in self._member_set

    @cached_property
    def _member_set(self) -> frozenset[int]:
        return frozenset(self.members)


def subgroup(group: FiniteMatrixGroup, gens: list[int]) -> SubgroupHandle:
    """Subgroup generated by the given parent ids"""
    return SubgroupHandle(group, closure(group, gens), tuple(gens))


def whole_group(group: FiniteMatrixGroup) -> SubgroupHandle:
    return SubgroupHandle(group, tuple(range(group.order)), tuple(group.generators))


def _conjugate_set(group: FiniteMatrixGroup, members: np.ndarray, g: int) -> tuple[int, ...]:
    return tuple(sorted(group.mul[group.mul[g, members], group.inv[g]].tolist()))


def subgroups_of_order(group: FiniteMatrixGroup, m: int) -> list[SubgroupHandle]:
    """Conjugacy classes of subgroups of order m generated by two elements.

    The first generator runs over class representatives, the second over all
    elements; each class is represented by its lexicographically least member list.
    """
    if m < 1 or group.order % m:
        raise ArgumentError("%d does not divide the group order %d" % (m, group.order))
    orders = group.element_orders
    known: set[frozenset[int]] = set()
    found: list[SubgroupHandle] = []
    reps = [c.representative for c in group.classes if m % c.order == 0]
    candidates = [b for b in range(group.order) if m % int(orders[b]) == 0]

    for a in reps:
        for b in candidates:
            members = closure(group, [a, b], limit=m)
            if members is None or len(members) != m:
                continue
            key = frozenset(members)
            if key in known:
                continue
            arr = np.asarray(members, dtype=np.int64)
            conjugates: dict[tuple[int, ...], int] = {}
            for g in range(group.order):
                conjugates.setdefault(_conjugate_set(group, arr, g), g)
            known.update(frozenset(c) for c in conjugates)
            canonical = min(conjugates)
            g = conjugates[canonical]
            gens = (group.conjugate(a, g), group.conjugate(b, g))
            found.append(SubgroupHandle(group, canonical, gens, class_size=len(conjugates)))

    found.sort(key=lambda h: h.members)
    logger.info("Order %d: %d conjugacy class(es) of subgroups in a group of order %d",
                m, len(found), group.order)
    return found


def all_subgroup_classes(group: FiniteMatrixGroup, min_order: int = 1) -> list[SubgroupHandle]:
    divisors = [d for d in range(min_order, group.order + 1) if group.order % d == 0]
    return [h for d in divisors for h in subgroups_of_order(group, d)]


def transitive_orbit_sizes(group: FiniteMatrixGroup, bound: int) -> set[int]:
    """Indices [G:H] <= bound over all subgroups H"""
    sizes = set()
    for d in range(1, group.order + 1):
        if group.order % d == 0 and group.order // d <= bound and subgroups_of_order(group, d):
            sizes.add(group.order // d)
    return sizes


def cyclic_orbit_sizes(group: FiniteMatrixGroup) -> set[int]:
    """Indices of the cyclic subgroups"""
    return {group.order // int(k) for k in set(group.element_orders.tolist())}


@dataclass
class Preimage:
    full: SubgroupHandle
    smallest: SubgroupHandle


def preimage_in_cover(quotient: FiniteMatrixGroup, handle: SubgroupHandle) -> Preimage:
    """Full preimage of a subgroup of a projectivized group, and the smallest surjecting subgroup"""
    if quotient.cover is None or quotient.cover_map is None:
        raise NotASubgroupError("Group carries no projection from a cover")
    if handle.parent is not quotient:
        raise NotASubgroupError("Subgroup does not live in the projectivized group")
    cover, phi = quotient.cover, quotient.cover_map
    kernel = tuple(int(k) for k in np.flatnonzero(phi == 0))
    inside = np.isin(phi, np.asarray(handle.members, dtype=np.int64))
    full_members = tuple(int(i) for i in np.flatnonzero(inside))
    lifts = [np.flatnonzero(phi == h).tolist() for h in handle.generators]
    full = SubgroupHandle(cover, full_members, tuple(l[0] for l in lifts) + kernel)

    target = set(handle.members)
    best: tuple[int, ...] | None = None
    best_gens: tuple[int, ...] = ()
    for choice in itertools.product(*lifts):
        members = closure(cover, list(choice))
        if {int(phi[x]) for x in members} != target:
            continue
        if best is None or (len(members), members) < (len(best), best):
            best, best_gens = members, choice
    smallest = SubgroupHandle(cover, best, tuple(best_gens)) if best is not None else full
    return Preimage(full=full, smallest=smallest)
