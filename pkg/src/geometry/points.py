import logging
from dataclasses import dataclass
from math import lcm
from typing import Sequence

from ..cyclotomic.field import CycNum
from ..cyclotomic.text import format_cyc, parse_cyc
from ..errors import GeometryError, TextFormatError
from ..linalg.io import split_entries
from ..linalg.matrix import CycMatrix

logger = logging.getLogger(__name__)


def _lift(values: Sequence[CycNum], n: int) -> tuple[CycNum, ...]:
    return tuple(v.embed(n) for v in values)


def proportional(v: Sequence[CycNum], w: Sequence[CycNum]) -> bool:
    """w is a scalar multiple of the nonzero vector v"""
    n = lcm(*(x.conductor for x in v), *(x.conductor for x in w))
    v, w = _lift(v, n), _lift(w, n)
    i = next(k for k, x in enumerate(v) if x)
    return all((w[j] * v[i] - v[j] * w[i]).is_zero() for j in range(len(v)))


@dataclass(frozen=True, eq=False)
class ProjPoint:
    """Point of projective space; the first nonzero coordinate is 1"""

    coords: tuple[CycNum, ...]

    @classmethod
    def from_coords(cls, values: Sequence[CycNum | int]) -> "ProjPoint":
        values = [v if isinstance(v, CycNum) else CycNum.from_int(v) for v in values]
        n = lcm(*(v.conductor for v in values))
        values = _lift(values, n)
        lead = next((v for v in values if v), None)
        if lead is None:
            raise GeometryError("The zero vector is not a projective point")
        if not lead.is_one():
            inv = lead.inverse()
            values = tuple(v * inv if v else v for v in values)
        return cls(values)

    @property
    def dimension(self) -> int:
        """Dimension of the ambient projective space"""
        return len(self.coords) - 1

    @property
    def conductor(self) -> int:
        return self.coords[0].conductor

    def embed(self, m: int) -> "ProjPoint":
        if m == self.conductor:
            return self
        return ProjPoint(_lift(self.coords, m))

    def apply(self, matrix: CycMatrix) -> "ProjPoint":
        """p . M"""
        return ProjPoint.from_coords(matrix.apply_row(self.coords))

    def is_fixed_by(self, matrix: CycMatrix) -> bool:
        return proportional(self.coords, matrix.apply_row(self.coords))

    def sort_key(self) -> tuple:
        return tuple(c.sort_key() for c in self.coords)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjPoint):
            return NotImplemented
        if len(self.coords) != len(other.coords):
            return False
        if self.conductor == other.conductor:
            return self.coords == other.coords
        n = lcm(self.conductor, other.conductor)
        return _lift(self.coords, n) == _lift(other.coords, n)

    def __hash__(self) -> int:
        # only conductor-independent data
        return hash(tuple(c.to_fraction() if c.is_rational() else None for c in self.coords))

    def __str__(self) -> str:
        return ", ".join(format_cyc(c) for c in self.coords)

    def __repr__(self) -> str:
        return "ProjPoint(%s)" % self


def parse_point(text: str, default_conductor: int | None = None) -> ProjPoint:
    """Comma separated cyc(n; ...) literals, e.g. 'cyc(7; 1), cyc(7; z), 0, 0'"""
    parts = [p for p in split_entries(text.replace(",", ";")) if p]
    if len(parts) < 2:
        raise TextFormatError("A point needs at least two coordinates: %r" % text)
    values = []
    for part in parts:
        values.append(parse_cyc(part, default_conductor if default_conductor is not None else 1))
    return ProjPoint.from_coords(values)


def load_points(text: str) -> list[ProjPoint]:
    lines = (raw.split("#", 1)[0].strip() for raw in text.splitlines())
    return [parse_point(line) for line in lines if line]


def dumps_points(points: Sequence[ProjPoint]) -> str:
    return "".join(str(p) + "\n" for p in points)
