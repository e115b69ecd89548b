"""Irreducible characters of the small groups that occur as subgroups.

Each catalog group is an explicit matrix group plus a list of recipes that
produce its irreducible characters one after another. A recipe may refer to
the characters built before it by position.
"""
import logging
from fractions import Fraction
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

from ..cyclotomic.field import CycNum
from ..errors import CharacterError
from ..groups.group import FiniteMatrixGroup, generate
from ..groups.isomorphism import classify, find_isomorphism
from ..linalg.matrix import CycMatrix
from .classfunc import ClassFunction, character_of, ext_power, inner, sym_power
from .table import CharacterTable, transport

logger = logging.getLogger(__name__)


# Recipes

class Recipe:
    def evaluate(self, group: FiniteMatrixGroup, known: list[ClassFunction]) -> ClassFunction:
        raise NotImplementedError


@dataclass(frozen=True)
class Trivial(Recipe):
    def evaluate(self, group, known):
        return ClassFunction.constant(group, 1)


@dataclass(frozen=True)
class Linear(Recipe):
    """One-dimensional character given by the images of the generators"""
    images: tuple[CycNum, ...]

    def evaluate(self, group, known):
        return character_of(group, [CycMatrix.from_rows([[x]]) for x in self.images])


@dataclass(frozen=True)
class Trace(Recipe):
    def evaluate(self, group, known):
        return character_of(group)


@dataclass(frozen=True)
class Galois(Recipe):
    index: int
    k: int = -1

    def evaluate(self, group, known):
        return known[self.index].galois(self.k)


@dataclass(frozen=True)
class Tensor(Recipe):
    left: int
    right: int

    def evaluate(self, group, known):
        return known[self.left] * known[self.right]


@dataclass(frozen=True)
class Sym(Recipe):
    index: int
    k: int

    def evaluate(self, group, known):
        return sym_power(known[self.index], self.k)


@dataclass(frozen=True)
class Ext(Recipe):
    index: int
    k: int

    def evaluate(self, group, known):
        return ext_power(known[self.index], self.k)


@dataclass(frozen=True)
class Peel(Recipe):
    """Subtract the projections onto the characters already found"""
    inner_recipe: Recipe

    def evaluate(self, group, known):
        chi = self.inner_recipe.evaluate(group, known)
        for psi in known:
            value = inner(chi, psi)
            if not value.is_integer() or value.to_fraction() < 0:
                raise CharacterError("Peeling met a non-integral multiplicity %s" % value)
            m = int(value.to_fraction())
            for _ in range(m):
                chi = chi - psi
        return chi


# Catalog groups

@dataclass(frozen=True)
class CatalogEntry:
    label: str
    generators: Callable[[], list[CycMatrix]]
    recipes: tuple[Recipe, ...]
    names: tuple[str, ...]


def _z(n: int, k: int = 1) -> CycNum:
    return CycNum.zeta(n, k)


def _mat(rows: Sequence[Sequence], conductor: int = 1) -> CycMatrix:
    return CycMatrix.from_rows(rows, conductor)


def _perm(images: Sequence[int]) -> CycMatrix:
    """Permutation matrix sending basis vector i to images[i]"""
    n = len(images)
    return _mat([[1 if images[i] == j else 0 for j in range(n)] for i in range(n)])


def _signs(n: int) -> list[tuple[CycNum, CycNum]]:
    one = CycNum.one(n)
    return [(one, one), (one, -one), (-one, one), (-one, -one)]


def _quaternion_w(n: int) -> CycMatrix:
    """(1 + i + j + k)/2 as a 2x2 matrix"""
    i = CycNum.root_of_unity(4, 1, n)
    one = CycNum.one(n)
    return _mat([[one + i, one + i], [-one + i, one - i]], n).scale(CycNum.from_fraction(Fraction(1, 2), n))


def cyclic_entry(k: int) -> CatalogEntry:
    n = k if k > 2 else 1
    zeta = CycNum.from_int(1) if k == 1 else (CycNum.from_int(-1) if k == 2 else _z(k))
    return CatalogEntry(
        label="Z%d" % k,
        generators=lambda: [_mat([[zeta]], n)],
        recipes=tuple(Linear((zeta ** j,)) for j in range(k)),
        names=tuple("chi%d" % j for j in range(k)),
    )


def _entries() -> dict[str, CatalogEntry]:
    entries = {}

    def add(label, generators, recipes, names):
        entries[label] = CatalogEntry(label, generators, tuple(recipes), tuple(names))

    one = CycNum.one()
    add("Z2xZ2",
        lambda: [_mat([[-1, 0], [0, 1]]), _mat([[1, 0], [0, -1]])],
        [Linear(s) for s in _signs(1)],
        ["1", "a", "b", "ab"])
    add("S3",
        lambda: [_perm([1, 2, 0]), _perm([1, 0, 2])],
        [Trivial(), Linear((one, -one)), Peel(Trace())],
        ["1", "sgn", "2"])
    add("D4",
        lambda: [_mat([[0, -1], [1, 0]]), _mat([[1, 0], [0, -1]])],
        [Linear(s) for s in _signs(1)] + [Trace()],
        ["1", "a", "b", "ab", "2"])
    omega = _z(3)
    one3 = CycNum.one(3)
    add("A4",
        lambda: [_perm([1, 2, 0, 3]), _perm([1, 0, 3, 2])],
        [Trivial(), Linear((omega, one3)), Linear((omega.conj(), one3)), Peel(Trace())],
        ["1", "w", "w2", "3"])
    add("S4",
        lambda: [_perm([1, 2, 3, 0]), _perm([1, 0, 2, 3])],
        [Trivial(), Linear((-one, -one)), Peel(Trace()), Tensor(2, 1), Peel(Tensor(2, 2))],
        ["1", "sgn", "3", "3s", "2"])

    # Z7:Z3 at conductor 21: zeta_7 = z^3, omega = z^7
    z7 = CycNum.root_of_unity(7, 1, 21)
    w21 = CycNum.root_of_unity(3, 1, 21)
    one21 = CycNum.one(21)
    cyc3 = _perm([1, 2, 0])
    add("Z7:Z3",
        lambda: [CycMatrix.diag([z7, z7 ** 2, z7 ** 4]), cyc3],
        [Trivial(), Linear((one21, w21)), Linear((one21, w21.conj())), Trace(), Galois(3)],
        ["1", "w", "w2", "3", "3b"])
    add("2.(Z7:Z3)",
        lambda: [CycMatrix.diag([-z7, -(z7 ** 2), -(z7 ** 4)]), cyc3],
        [Linear((s, w21 ** j)) for s in (one21, -one21) for j in range(3)]
        + [Trace(), Galois(6), Tensor(6, 3), Tensor(7, 3)],
        ["1", "w", "w2", "c", "cw", "cw2", "3", "3b", "3c", "3bc"])

    i4 = _z(4)
    add("2.(Z2xZ2)",
        lambda: [CycMatrix.diag([i4, -i4]), _mat([[0, -1], [1, 0]], 4)],
        [Linear(s) for s in _signs(4)] + [Trace()],
        ["1", "a", "b", "ab", "2"])

    # 2.S3 at conductor 12: omega = z^4, i = z^3
    w12 = CycNum.root_of_unity(3, 1, 12)
    i12 = CycNum.root_of_unity(4, 1, 12)
    one12 = CycNum.one(12)
    add("2.S3",
        lambda: [CycMatrix.diag([w12, w12.conj()]), _mat([[0, -1], [1, 0]], 12)],
        [Linear((one12, i12 ** j)) for j in range(4)] + [Trace(), Tensor(4, 1)],
        ["1", "i", "-1", "-i", "2f", "2"])

    z8 = _z(8)
    one8 = CycNum.one(8)
    add("2.D4",
        lambda: [CycMatrix.diag([z8, z8.conj()]), _mat([[0, -1], [1, 0]], 8)],
        [Linear(s) for s in _signs(8)] + [Trace(), Galois(4, 3), Peel(Sym(4, 2))],
        ["1", "a", "b", "ab", "2f", "2f3", "2"])

    add("2.A4",
        lambda: [CycMatrix.diag([i12, -i12]), _quaternion_w(12)],
        [Trivial(), Linear((one12, w12)), Linear((one12, w12.conj())), Trace(),
         Tensor(3, 1), Tensor(3, 2), Peel(Sym(3, 2))],
        ["1", "w", "w2", "2f", "2fw", "2fw2", "3"])
    add("2.S4",
        lambda: [CycMatrix.diag([z8, z8.conj()]), _quaternion_w(8)],
        [Trivial(), Linear((-one8, one8)), Trace(), Tensor(2, 1), Sym(2, 2), Tensor(4, 1),
         Peel(Tensor(4, 4)), Peel(Sym(2, 3))],
        ["1", "sgn", "2f", "2fs", "3", "3s", "2", "4f"])
    return entries


@lru_cache(maxsize=None)
def catalog_entries() -> dict[str, CatalogEntry]:
    return _entries()


def catalog_entry(label: str) -> CatalogEntry:
    if label.startswith("Z") and label[1:].isdigit():
        return cyclic_entry(int(label[1:]))
    try:
        return catalog_entries()[label]
    except KeyError:
        raise CharacterError("No catalog table for groups of type %s" % label) from None


@lru_cache(maxsize=None)
def catalog_table(label: str) -> CharacterTable:
    """Build and verify the table of a catalog group on its own matrix realisation"""
    entry = catalog_entry(label)
    group = generate(entry.generators(), cap=200, label=label)
    found = classify(group)
    if found != label:
        raise CharacterError("Catalog group %s classifies as %s" % (label, found))
    rows: list[ClassFunction] = []
    for name, recipe in zip(entry.names, entry.recipes):
        chi = recipe.evaluate(group, rows)
        if not inner(chi, chi).is_one():
            raise CharacterError("Catalog character %s of %s is not irreducible" % (name, label))
        rows.append(chi)
    table = CharacterTable(group, list(entry.names), rows).verify()
    if not table.is_complete():
        raise CharacterError("Catalog table of %s is incomplete: degrees %s" % (label, table.degrees))
    logger.debug("Catalog table for %s verified (degrees %s)", label, table.degrees)
    return table


def table_for(group: FiniteMatrixGroup) -> CharacterTable:
    """Irreducible table of a concrete group, transported from the catalog by an isomorphism"""
    label = classify(group)
    source = catalog_table(label)
    phi = find_isomorphism(source.group, group)
    return transport(source, group, phi).verify()
