import logging
from collections import Counter
from string import ascii_lowercase

import numpy as np

from .group import ConjugacyClass, FiniteMatrixGroup

logger = logging.getLogger(__name__)


def compute_classes(group: FiniteMatrixGroup) -> tuple[list[ConjugacyClass], np.ndarray]:
    """Classes ordered by (element order, smallest member id), with power maps.

    Names follow the usual order-plus-letter scheme: 1a, 2a, 3a, 4a, 7a, 7b.
    """
    n = group.order
    mul, inv = group.mul, group.inv
    orders = group.element_orders
    class_of = np.full(n, -1, dtype=np.int64)
    raw: list[tuple[int, ...]] = []
    for x in range(n):
        if class_of[x] >= 0:
            continue
        members = np.unique(mul[mul[:, x], inv])
        class_of[members] = len(raw)
        raw.append(tuple(int(m) for m in members))

    ordering = sorted(range(len(raw)), key=lambda c: (int(orders[raw[c][0]]), raw[c][0]))
    renumber = np.empty(len(raw), dtype=np.int64)
    renumber[ordering] = np.arange(len(raw))
    class_of = renumber[class_of]

    letters: Counter[int] = Counter()
    classes = []
    for index, c in enumerate(ordering):
        members = raw[c]
        rep = members[0]
        order = int(orders[rep])
        powers = tuple(int(class_of[group.power(rep, k)]) for k in range(order))
        name = "%d%s" % (order, ascii_lowercase[letters[order]])
        letters[order] += 1
        classes.append(ConjugacyClass(index, rep, members, order, powers, name))

    logger.debug("Group of order %d has %d conjugacy classes", n, len(classes))
    return classes, class_of


def conjugacy_classes(group: FiniteMatrixGroup) -> list[ConjugacyClass]:
    return group.classes


def class_sizes(group: FiniteMatrixGroup) -> list[int]:
    return [c.size for c in group.classes]
