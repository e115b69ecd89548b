import logging
from dataclasses import dataclass
from math import lcm
from typing import Sequence

from ..cyclotomic.field import CycNum, lift_common
from ..errors import CharacterError
from ..groups.group import FiniteMatrixGroup
from ..linalg.matrix import CycMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ClassFunction:
    """One value per conjugacy class, in the group's class order"""

    group: FiniteMatrixGroup
    values: tuple[CycNum, ...]

    def __post_init__(self):
        if len(self.values) != len(self.group.classes):
            raise CharacterError(
                "Expected %d class values, got %d" % (len(self.group.classes), len(self.values))
            )
        object.__setattr__(self, "values", tuple(lift_common(self.values)))

    @classmethod
    def constant(cls, group: FiniteMatrixGroup, value: int = 1) -> "ClassFunction":
        return cls(group, tuple(CycNum.from_int(value) for _ in group.classes))

    @property
    def conductor(self) -> int:
        return self.values[0].conductor

    @property
    def degree(self) -> int:
        return int(self.values[0].to_fraction())

    def __getitem__(self, class_index: int) -> CycNum:
        return self.values[class_index]

    def at(self, element: int) -> CycNum:
        return self.values[int(self.group.class_of[element])]

    def _check(self, other: "ClassFunction"):
        if other.group is not self.group:
            raise CharacterError("Class functions live on different groups")

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassFunction) or other.group is not self.group:
            return NotImplemented
        a, b = _pair(self.values, other.values)
        return a == b

    __hash__ = None

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        a, b = _pair(self.values, other.values)
        return ClassFunction(self.group, tuple(x + y for x, y in zip(a, b)))

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        a, b = _pair(self.values, other.values)
        return ClassFunction(self.group, tuple(x - y for x, y in zip(a, b)))

    def __mul__(self, other):
        """Pointwise product (tensor product of representations) or integer scaling"""
        if isinstance(other, int):
            return ClassFunction(self.group, tuple(x * other for x in self.values))
        self._check(other)
        a, b = _pair(self.values, other.values)
        return ClassFunction(self.group, tuple(x * y for x, y in zip(a, b)))

    __rmul__ = __mul__

    def conj(self) -> "ClassFunction":
        return ClassFunction(self.group, tuple(x.conj() for x in self.values))

    def galois(self, k: int) -> "ClassFunction":
        n = self.conductor
        return ClassFunction(self.group, tuple(x.galois_conjugate(k % n) for x in self.values))

    def power_map(self, k: int) -> "ClassFunction":
        """g -> chi(g^k)"""
        return ClassFunction(self.group, tuple(self.values[c.power(k)] for c in self.group.classes))

    def is_real(self) -> bool:
        return self == self.conj()


def _pair(a: Sequence[CycNum], b: Sequence[CycNum]) -> tuple[tuple[CycNum, ...], tuple[CycNum, ...]]:
    n = lcm(a[0].conductor, b[0].conductor)
    return tuple(x.embed(n) for x in a), tuple(x.embed(n) for x in b)


def inner(chi: ClassFunction, psi: ClassFunction) -> CycNum:
    """(1/|G|) sum over classes of size * chi * conj(psi)"""
    chi._check(psi)
    a, b = _pair(chi.values, psi.values)
    total = CycNum.zero(a[0].conductor)
    for cls, x, y in zip(chi.group.classes, a, b):
        if x and y:
            total = total + x * y.conj() * cls.size
    return total / chi.group.order


def multiplicity(chi: ClassFunction, psi: ClassFunction) -> int:
    """inner(chi, psi) asserted to be a non-negative integer"""
    value = inner(chi, psi)
    if not value.is_rational() or value.to_fraction().denominator != 1 or value.to_fraction() < 0:
        raise CharacterError("Multiplicity %s is not a non-negative integer" % value)
    return int(value.to_fraction())


def sym_power(chi: ClassFunction, k: int) -> ClassFunction:
    """Newton recurrence k S_k(g) = sum_{i=1..k} chi(g^i) S_{k-i}(g)"""
    return _newton(chi, k, alternating=False)


def ext_power(chi: ClassFunction, k: int) -> ClassFunction:
    """k L_k(g) = sum_{i=1..k} (-1)^(i-1) chi(g^i) L_{k-i}(g)"""
    return _newton(chi, k, alternating=True)


def _newton(chi: ClassFunction, k: int, alternating: bool) -> ClassFunction:
    if k < 0:
        raise CharacterError("Power must be non-negative")
    values = []
    for cls in chi.group.classes:
        powers = [None] + [chi.values[cls.power(i)] for i in range(1, k + 1)]
        series = [CycNum.one(chi.conductor)]
        for m in range(1, k + 1):
            acc = CycNum.zero(chi.conductor)
            for i in range(1, m + 1):
                term = powers[i] * series[m - i]
                acc = acc - term if alternating and i % 2 == 0 else acc + term
            series.append(acc / m)
        values.append(series[k])
    return ClassFunction(chi.group, tuple(values))


def character_of(group: FiniteMatrixGroup, images: Sequence[CycMatrix] | None = None) -> ClassFunction:
    """Trace character of the defining matrices, or of a representation given by generator images"""
    if images is None:
        if group.projective:
            raise CharacterError("A projectivized group has no defining linear action")
        return ClassFunction(group, tuple(group.elements[c.representative].trace() for c in group.classes))

    if len(images) != len(group.generators):
        raise CharacterError("Need one image per generator (%d), got %d" % (len(group.generators), len(images)))
    size = images[0].rows
    conductor = lcm(*(m.conductor for m in images))
    images = [m.embed(conductor) for m in images]
    values = []
    for cls in group.classes:
        matrix = CycMatrix.identity(size, conductor)
        for s in group.word(cls.representative):
            matrix = matrix @ images[s]
        values.append(matrix.trace())
    return ClassFunction(group, tuple(values))


def as_int(value: CycNum) -> int:
    frac = value.to_fraction()
    if frac.denominator != 1:
        raise CharacterError("%s is not an integer" % value)
    return int(frac)
