import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from math import lcm
from typing import Sequence

import numpy as np

from ..errors import GroupTooLargeError, ShapeError
from ..linalg.matrix import CycMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConjugacyClass:
    index: int
    representative: int
    members: tuple[int, ...]
    order: int
    powers: tuple[int, ...]  # powers[k] = class of g^k for 0 <= k < order
    name: str

    @property
    def size(self) -> int:
        return len(self.members)

    def power(self, k: int) -> int:
        return self.powers[k % self.order]


@dataclass(eq=False)
class FiniteMatrixGroup:
    """A finite group of matrices with its Cayley table.

    Element 0 is the identity; ids follow breadth-first discovery order.
    mul[i, j] is the id of elements[i] @ elements[j].
    """

    elements: list[CycMatrix]
    mul: np.ndarray
    generators: list[int]
    projective: bool = False
    label: str = ""
    # Set on a projectivized group: the group it came from and the map cover id -> id here
    cover: "FiniteMatrixGroup | None" = None
    cover_map: np.ndarray | None = None
    _index: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self._index:
            self._index = {m.key(): i for i, m in enumerate(self.elements)}

    # Construction

    @classmethod
    def from_table(cls, elements: list[CycMatrix], mul: np.ndarray, generators: Sequence[int],
                   projective: bool = False, label: str = "") -> "FiniteMatrixGroup":
        return cls(list(elements), mul, list(generators), projective=projective, label=label)

    # Basic data

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def dimension(self) -> int:
        return self.elements[0].rows

    @property
    def conductor(self) -> int:
        return self.elements[0].conductor

    def element_id(self, m: CycMatrix) -> int | None:
        m = m.embed(self.conductor) if m.conductor != self.conductor else m
        if self.projective:
            m = m.normalized()
        return self._index.get(m.key())

    @cached_property
    def inv(self) -> np.ndarray:
        return np.argmax(self.mul == 0, axis=1)

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self.order
        ids = np.arange(n)
        orders = np.zeros(n, dtype=np.int64)
        current = ids.copy()
        for k in range(1, n + 1):
            hit = (current == 0) & (orders == 0)
            orders[hit] = k
            if orders.all():
                break
            current = self.mul[current, ids]
        return orders

    def order_histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(int(o) for o in self.element_orders).items()))

    def power(self, g: int, k: int) -> int:
        k %= int(self.element_orders[g])
        result, base = 0, g
        while k:
            if k & 1:
                result = int(self.mul[result, base])
            base = int(self.mul[base, base])
            k >>= 1
        return result

    def conjugate(self, x: int, g: int) -> int:
        """g x g^-1"""
        return int(self.mul[self.mul[g, x], self.inv[g]])

    @cached_property
    def center(self) -> list[int]:
        return [int(z) for z in np.flatnonzero(np.all(self.mul == self.mul.T, axis=1))]

    @cached_property
    def derived_subgroup(self) -> tuple[int, ...]:
        # [a, b] = a b a^-1 b^-1 for every pair
        x, inv = self.mul, self.inv
        comm = x[x[x, inv[:, None]], inv[None, :]]
        commutators = np.unique(comm)
        return closure(self, [int(c) for c in commutators])

    @property
    def abelianization_order(self) -> int:
        return self.order // len(self.derived_subgroup)

    @cached_property
    def _class_data(self) -> tuple[list[ConjugacyClass], np.ndarray]:
        from .classes import compute_classes
        return compute_classes(self)

    @property
    def classes(self) -> list[ConjugacyClass]:
        return self._class_data[0]

    @property
    def class_of(self) -> np.ndarray:
        """Element id -> class index"""
        return self._class_data[1]

    # Breadth-first spanning tree over the generators

    @cached_property
    def tree(self) -> tuple[np.ndarray, np.ndarray, list[int]]:
        """(parent, via, order): elements[i] = elements[parent[i]] @ elements[generators[via[i]]]"""
        n = self.order
        parent = np.full(n, -1, dtype=np.int64)
        via = np.full(n, -1, dtype=np.int64)
        seen = np.zeros(n, dtype=bool)
        seen[0] = True
        queue = [0]
        for x in queue:
            for s, g in enumerate(self.generators):
                y = int(self.mul[x, g])
                if not seen[y]:
                    seen[y] = True
                    parent[y], via[y] = x, s
                    queue.append(y)
        return parent, via, queue

    def word(self, i: int) -> list[int]:
        """Generator indices whose product (left to right) is element i"""
        parent, via, _ = self.tree
        word = []
        while i != 0:
            word.append(int(via[i]))
            i = int(parent[i])
        return word[::-1]

    # Subgroups by id

    def subgroup_table(self, members: Sequence[int]) -> tuple[list[CycMatrix], np.ndarray]:
        members = np.asarray(members, dtype=np.int64)
        position = np.full(self.order, -1, dtype=np.int64)
        position[members] = np.arange(len(members))
        sub_mul = position[self.mul[np.ix_(members, members)]]
        return [self.elements[int(i)] for i in members], sub_mul


def closure(group: FiniteMatrixGroup, gens: Sequence[int], limit: int | None = None) -> tuple[int, ...] | None:
    """Subgroup generated by ids, or None once it grows past limit"""
    seen = {0}
    queue = [0]
    for x in queue:
        for g in gens:
            y = int(group.mul[x, g])
            if y not in seen:
                seen.add(y)
                queue.append(y)
                if limit is not None and len(seen) > limit:
                    return None
    return tuple(sorted(seen))


def generate(gens: Sequence[CycMatrix], cap: int = 1000, projective: bool = False, label: str = "") -> FiniteMatrixGroup:
    """Breadth-first closure under right multiplication by the generators"""
    if not gens:
        raise ShapeError("At least one generator is required")
    size = gens[0].rows
    if any(not g.is_square or g.rows != size for g in gens):
        raise ShapeError("Generators must be square matrices of one size")
    conductor = lcm(*(g.conductor for g in gens))

    def canonical(m: CycMatrix) -> CycMatrix:
        return m.normalized() if projective else m

    gens = [canonical(g.embed(conductor)) for g in gens]
    identity = CycMatrix.identity(size, conductor)
    elements = [identity]
    index = {identity.key(): 0}
    parent, via = [-1], [-1]
    right = [[] for _ in gens]  # right[s][i] = id of elements[i] @ gens[s]

    i = 0
    while i < len(elements):
        current = elements[i]
        for s, g in enumerate(gens):
            product = canonical(current @ g)
            key = product.key()
            j = index.get(key)
            if j is None:
                j = len(elements)
                if j >= cap:
                    raise GroupTooLargeError("Closure exceeded %d elements" % cap)
                index[key] = j
                elements.append(product)
                parent.append(i)
                via.append(s)
            right[s].append(j)
        i += 1

    n = len(elements)
    right_arr = [np.asarray(r, dtype=np.int64) for r in right]
    mul = np.empty((n, n), dtype=np.int64)
    mul[:, 0] = np.arange(n)
    for j in range(1, n):
        # x * e_j = (x * e_parent) * g_via
        mul[:, j] = right_arr[via[j]][mul[:, parent[j]]]

    gen_ids = [index[g.key()] for g in gens]
    logger.info("Generated group of order %d from %d generators (conductor %d)", n, len(gens), conductor)
    return FiniteMatrixGroup(elements, mul, gen_ids, projective=projective, label=label, _index=index)


def projectivize(group: FiniteMatrixGroup) -> FiniteMatrixGroup:
    """Quotient by scalar matrices, cosets represented with first nonzero entry 1"""
    gens = [group.elements[g] for g in group.generators]
    quotient = generate(gens, cap=group.order, projective=True, label=group.label)
    quotient.cover = group
    quotient.cover_map = np.array(
        [quotient.element_id(m) for m in group.elements], dtype=np.int64
    )
    scalars = sum(1 for m in group.elements if m.is_scalar())
    if quotient.order * scalars != group.order:
        raise GroupTooLargeError(
            "Projectivization order %d does not match %d / %d" % (quotient.order, group.order, scalars)
        )
    logger.info("Projectivized group of order %d to order %d", group.order, quotient.order)
    return quotient


def lift(group: FiniteMatrixGroup, q: int) -> int:
    """Preimage of q in the cover with the smallest element order (ties by id)"""
    if group.cover is None or group.cover_map is None:
        raise ShapeError("Group has no cover to lift into")
    candidates = np.flatnonzero(group.cover_map == q)
    orders = group.cover.element_orders[candidates]
    best = min(zip(orders.tolist(), candidates.tolist()))
    return best[1]
