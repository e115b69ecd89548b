import itertools
import logging
from collections import Counter

import numpy as np

from ..errors import IsomorphismNotFoundError
from .group import FiniteMatrixGroup, closure

logger = logging.getLogger(__name__)

# (order, element-order histogram, center order, abelianization order)
Fingerprint = tuple[int, tuple[tuple[int, int], ...], int, int]


def _fp(order: int, hist: dict[int, int], center: int, abel: int) -> Fingerprint:
    return order, tuple(sorted(hist.items())), center, abel


FINGERPRINTS: dict[Fingerprint, str] = {
    _fp(4, {1: 1, 2: 3}, 4, 4): "Z2xZ2",
    _fp(6, {1: 1, 2: 3, 3: 2}, 1, 2): "S3",
    _fp(8, {1: 1, 2: 5, 4: 2}, 2, 4): "D4",
    _fp(12, {1: 1, 2: 3, 3: 8}, 1, 3): "A4",
    _fp(24, {1: 1, 2: 9, 3: 8, 4: 6}, 1, 2): "S4",
    _fp(21, {1: 1, 3: 14, 7: 6}, 1, 3): "Z7:Z3",
    _fp(8, {1: 1, 2: 1, 4: 6}, 2, 4): "2.(Z2xZ2)",
    _fp(12, {1: 1, 2: 1, 3: 2, 4: 6, 6: 2}, 2, 4): "2.S3",
    _fp(16, {1: 1, 2: 1, 4: 10, 8: 4}, 2, 4): "2.D4",
    _fp(24, {1: 1, 2: 1, 3: 8, 4: 6, 6: 8}, 2, 3): "2.A4",
    _fp(48, {1: 1, 2: 1, 3: 8, 4: 18, 6: 8, 8: 12}, 2, 2): "2.S4",
    _fp(42, {1: 1, 2: 1, 3: 14, 6: 14, 7: 6, 14: 6}, 2, 6): "2.(Z7:Z3)",
    _fp(168, {1: 1, 2: 21, 3: 56, 4: 42, 7: 48}, 1, 1): "PSL2(F7)",
    _fp(336, {1: 1, 2: 1, 3: 56, 4: 42, 6: 56, 7: 48, 8: 84, 14: 48}, 2, 1): "SL2(F7)",
}


def fingerprint(group: FiniteMatrixGroup) -> Fingerprint:
    return _fp(group.order, group.order_histogram(), len(group.center), group.abelianization_order)


def classify(group: FiniteMatrixGroup) -> str:
    """Isomorphism label from the fingerprint catalog; cyclic groups are Z<n>"""
    if int(group.element_orders.max()) == group.order:
        return "Z%d" % group.order
    return FINGERPRINTS.get(fingerprint(group), "other")


def two_generators(group: FiniteMatrixGroup) -> list[int]:
    """A generating set of at most two ids, preferring small orders and small ids.

    Falls back to a greedy generating set when no pair generates.
    """
    n = group.order
    if n == 1:
        return [0]
    orders = group.element_orders
    ranked = sorted(range(1, n), key=lambda i: (int(orders[i]), i))
    if int(orders.max()) == n:
        return [int(np.flatnonzero(orders == n)[0])]
    seen_first: set[int] = set()
    for a in ranked:
        # one representative per cyclic subgroup for the first generator
        cyclic = closure(group, [a])
        if cyclic in seen_first:
            continue
        seen_first.add(cyclic)
        for b in ranked:
            members = closure(group, [a, b])
            if len(members) == n:
                return [a, b]
    gens: list[int] = []
    current: tuple[int, ...] = (0,)
    for g in ranked:
        if g not in current:
            gens.append(g)
            current = closure(group, gens)
            if len(current) == n:
                break
    return gens


def find_isomorphism(source: FiniteMatrixGroup, target: FiniteMatrixGroup,
                     source_gens: list[int] | None = None) -> np.ndarray:
    """Array phi with phi[i] = image in target of source element i.

    Images of a small generating set are searched among target elements of
    matching order; the rest of the map follows the breadth-first tree and
    is accepted only when it is a bijective homomorphism.
    """
    if source.order != target.order or Counter(source.element_orders.tolist()) != Counter(target.element_orders.tolist()):
        raise IsomorphismNotFoundError(
            "Orders or element-order histograms differ (%d vs %d)" % (source.order, target.order)
        )
    gens = source_gens or two_generators(source)
    n = source.order

    # Spanning tree of the source over the chosen generators
    parent = np.full(n, -1, dtype=np.int64)
    via = np.full(n, -1, dtype=np.int64)
    seen = {0}
    queue = [0]
    for x in queue:
        for s, g in enumerate(gens):
            y = int(source.mul[x, g])
            if y not in seen:
                seen.add(y)
                parent[y], via[y] = x, s
                queue.append(y)
    if len(queue) != n:
        raise IsomorphismNotFoundError("Chosen elements do not generate the source group")

    target_orders = target.element_orders
    candidates = [np.flatnonzero(target_orders == source.element_orders[g]).tolist() for g in gens]
    columns = [source.mul[:, g] for g in gens]
    tried = 0
    for images in itertools.product(*candidates):
        tried += 1
        phi = np.zeros(n, dtype=np.int64)
        for y in queue[1:]:
            phi[y] = target.mul[phi[parent[y]], images[via[y]]]
        if not all(np.array_equal(phi[col], target.mul[phi, img]) for col, img in zip(columns, images)):
            continue
        if len(np.unique(phi)) != n:
            continue
        logger.debug("Isomorphism of order-%d groups found after %d candidates", n, tried)
        return phi
    raise IsomorphismNotFoundError("No isomorphism after %d candidate generator images" % tried)


def invert_map(phi: np.ndarray) -> np.ndarray:
    inverse = np.empty_like(phi)
    inverse[phi] = np.arange(len(phi))
    return inverse
