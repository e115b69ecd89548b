import logging
from dataclasses import dataclass, field

import numpy as np

from ..cyclotomic.field import CycNum
from ..cyclotomic.text import format_cyc
from ..errors import CharacterError
from ..groups.group import FiniteMatrixGroup
from ..groups.isomorphism import find_isomorphism, invert_map
from .classfunc import ClassFunction, character_of, ext_power, inner, multiplicity, sym_power

logger = logging.getLogger(__name__)

EPSILON = CycNum.from_vector(7, [0, 1, 1, 0, 1])  # z + z^2 + z^4


@dataclass(eq=False)
class CharacterTable:
    group: FiniteMatrixGroup
    labels: list[str]
    rows: list[ClassFunction]
    class_labels: list[str] = field(default_factory=list)

    def __post_init__(self):
        if not self.class_labels:
            self.class_labels = [c.name for c in self.group.classes]

    def __getitem__(self, label: str) -> ClassFunction:
        try:
            return self.rows[self.labels.index(label)]
        except ValueError:
            raise CharacterError("No character labelled %r" % label) from None

    @property
    def degrees(self) -> list[int]:
        return [row.degree for row in self.rows]

    def is_complete(self) -> bool:
        return sum(d * d for d in self.degrees) == self.group.order

    def verify(self) -> "CharacterTable":
        """Assert first orthogonality, and second orthogonality when complete"""
        for i, chi in enumerate(self.rows):
            for j, psi in enumerate(self.rows[i:], i):
                value = inner(chi, psi)
                expected = 1 if i == j else 0
                if value != CycNum.from_int(expected, value.conductor):
                    raise CharacterError(
                        "<%s, %s> = %s, expected %d" % (self.labels[i], self.labels[j], value, expected)
                    )
        if self.is_complete():
            order = self.group.order
            classes = self.group.classes
            for a, ca in enumerate(classes):
                for b in range(a, len(classes)):
                    total = sum((row[a] * row[b].conj() for row in self.rows), CycNum.zero(self.rows[0].conductor))
                    expected = order // ca.size if a == b else 0
                    if total != CycNum.from_int(expected, total.conductor):
                        raise CharacterError(
                            "Column orthogonality fails at classes %s, %s" % (ca.name, classes[b].name)
                        )
        return self

    def decompose(self, chi: ClassFunction) -> dict[str, int]:
        """Multiplicities of every row in chi; must account for all of chi"""
        result = {label: multiplicity(chi, row) for label, row in zip(self.labels, self.rows)}
        if sum(m * row.degree for m, row in zip(result.values(), self.rows)) != chi.degree:
            raise CharacterError("Decomposition does not exhaust a character of degree %d" % chi.degree)
        rebuilt = ClassFunction.constant(self.group, 0)
        for m, row in zip(result.values(), self.rows):
            if m:
                rebuilt = rebuilt + row * m
        if rebuilt != chi:
            raise CharacterError("Decomposition does not reproduce the character")
        return {label: m for label, m in result.items() if m}

    def as_grid(self) -> list[list[str]]:
        return [[format_cyc(v) for v in row.values] for row in self.rows]

    def to_dict(self) -> dict:
        return {
            "order": self.group.order,
            "classes": [
                {"label": label, "size": c.size, "order": c.order}
                for label, c in zip(self.class_labels, self.group.classes)
            ],
            "characters": {label: values for label, values in zip(self.labels, self.as_grid())},
        }


def decompose(chi: ClassFunction, table: CharacterTable) -> dict[str, int]:
    return table.decompose(chi)


def _check_norm(label: str, chi: ClassFunction):
    value = inner(chi, chi)
    if not value.is_one():
        raise CharacterError("%s has norm %s, expected 1" % (label, value))


PSL_LABELS = ["I", "W3", "W3d", "W6", "W7", "W8"]


def build_psl_table(group: FiniteMatrixGroup) -> CharacterTable:
    """Irreducible characters of PSL2(F7) from its three-dimensional matrix group.

    I trivial, W3 by trace, W3d its conjugate, W6 = Sym^2 W3,
    W7 = Sym^3 W3d - W3, W8 = W7 (x) W3d - W6 - W7.
    """
    if group.order != 168:
        raise CharacterError("Expected a group of order 168, got %d" % group.order)
    w3 = character_of(group)
    trivial = ClassFunction.constant(group, 1)
    w3d = w3.conj()
    w6 = sym_power(w3, 2)
    w7 = sym_power(w3d, 3) - w3
    w8 = w7 * w3d - w6 - w7
    rows = [trivial, w3, w3d, w6, w7, w8]
    for label, chi in zip(PSL_LABELS, rows):
        _check_norm(label, chi)

    epsilon = EPSILON.embed(w3.conductor) if w3.conductor % 7 == 0 else None
    class_labels = []
    for c, value in zip(group.classes, w3.values):
        if c.order == 7:
            class_labels.append("(7)" if value == epsilon else "(7')")
        else:
            class_labels.append("(%d)" % c.order)
    table = CharacterTable(group, list(PSL_LABELS), rows, class_labels).verify()
    if not table.is_complete():
        raise CharacterError("PSL2(F7) table is incomplete")
    logger.info("Built PSL2(F7) character table with degrees %s", table.degrees)
    return table


def transport(table: CharacterTable, target: FiniteMatrixGroup, phi: np.ndarray) -> CharacterTable:
    """Move a table along an isomorphism phi: table.group -> target"""
    back = invert_map(phi)
    source_class = table.group.class_of
    rows = []
    for row in table.rows:
        values = tuple(row.values[int(source_class[back[c.representative]])] for c in target.classes)
        rows.append(ClassFunction(target, values))
    labels_by_class = {}
    for c in target.classes:
        labels_by_class[c.index] = table.class_labels[int(source_class[back[c.representative]])]
    return CharacterTable(target, list(table.labels), rows, [labels_by_class[c.index] for c in target.classes])


def pull_back(table: CharacterTable, cover: FiniteMatrixGroup, cover_map: np.ndarray) -> list[ClassFunction]:
    """Inflate characters of a quotient to the cover"""
    quotient_class = table.group.class_of
    rows = []
    for row in table.rows:
        values = tuple(row.values[int(quotient_class[cover_map[c.representative]])] for c in cover.classes)
        rows.append(ClassFunction(cover, values))
    return rows


# Values of U8 by element order in SL2(F7)
U8_BY_ORDER = {1: 8, 2: -8, 3: -1, 4: 0, 6: 1, 7: 1, 8: 0, 14: -1}


@dataclass
class CoverTables:
    quotient_table: CharacterTable  # PSL2(F7) table on the projectivized cover
    table: CharacterTable  # pulled-back rows plus U4 and U8 on the cover
    isomorphism: np.ndarray  # plane group id -> projectivized id
    u4_alpha_bar_class: str  # PSL label of the order-7 class where U4 = conj(alpha)


def build_sl_table(plane_table: CharacterTable, quotient: FiniteMatrixGroup) -> CoverTables:
    """Characters of the cover SL2(F7): PSL rows pulled back, U4 from traces, U8 from data.

    quotient must be the projectivization of the four-dimensional group.
    """
    cover, cover_map = quotient.cover, quotient.cover_map
    if cover is None or cover_map is None:
        raise CharacterError("Quotient carries no cover")
    phi = find_isomorphism(plane_table.group, quotient)
    quotient_table = transport(plane_table, quotient, phi)
    pulled = pull_back(quotient_table, cover, cover_map)

    u4 = character_of(cover)
    u8 = ClassFunction(cover, tuple(CycNum.from_int(U8_BY_ORDER[c.order]) for c in cover.classes))
    labels = list(PSL_LABELS) + ["U4", "U8"]
    rows = pulled + [u4, u8]
    for label, chi in zip(labels, rows):
        _check_norm(label, chi)

    quotient_class = quotient.class_of
    class_labels = []
    for c in cover.classes:
        image = quotient_table.class_labels[int(quotient_class[cover_map[c.representative]])]
        label = "%s_%d" % (image, c.order)
        while label in class_labels:
            label += "'"
        class_labels.append(label)
    table = CharacterTable(cover, labels, rows, class_labels).verify()

    alpha_bar = (EPSILON + 1).conj()
    marker = ""
    for c, label in zip(cover.classes, class_labels):
        if c.order == 7 and u4.values[c.index] == alpha_bar.embed(u4.conductor):
            marker = label.split("_")[0]
    logger.info("Built SL2(F7) character rows %s; U4 = conj(alpha) on class %s", labels, marker)
    return CoverTables(quotient_table, table, phi, marker)
