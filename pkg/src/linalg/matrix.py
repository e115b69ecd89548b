import logging
from dataclasses import dataclass
from math import lcm
from typing import Iterable, Sequence

from ..cyclotomic.field import CycNum
from ..errors import ShapeError, SingularMatrixError

logger = logging.getLogger(__name__)

Vector = tuple[CycNum, ...]


def _lift_rows(rows: Sequence[Sequence[CycNum]], conductor: int | None) -> tuple[int, list[list[CycNum]]]:
    n = lcm(*(x.conductor for row in rows for x in row)) if rows and rows[0] else 1
    if conductor is not None:
        n = lcm(n, conductor)
    return n, [[x.embed(n) for x in row] for row in rows]


def rref(rows: list[list[CycNum]], ncols: int) -> tuple[list[list[CycNum]], list[int]]:
    """Gauss-Jordan elimination on a copy; returns nonzero rows and pivot columns"""
    work = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(work)) if work[i][c]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = work[r][c].inverse()
        work[r] = [x * inv if x else x for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                factor = work[i][c]
                work[i] = [x - factor * y if y else x for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


@dataclass(frozen=True)
class Subspace:
    """Row span kept in reduced row echelon form, so equality is structural"""

    ambient: int
    conductor: int
    basis: tuple[Vector, ...]

    @classmethod
    def from_vectors(cls, vectors: Iterable[Sequence[CycNum]], ambient: int, conductor: int | None = None) -> "Subspace":
        vectors = [list(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient:
                raise ShapeError("Vector of length %d in ambient %d" % (len(v), ambient))
        if not vectors:
            return cls(ambient, conductor or 1, ())
        n, lifted = _lift_rows(vectors, conductor)
        reduced, _ = rref(lifted, ambient)
        return cls(ambient, n, tuple(tuple(r) for r in reduced))

    @classmethod
    def full(cls, ambient: int, conductor: int = 1) -> "Subspace":
        return cls.from_vectors(CycMatrix.identity(ambient, conductor).row_lists(), ambient, conductor)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence[CycNum]) -> bool:
        n, lifted = _lift_rows([list(b) for b in self.basis] + [list(v)], self.conductor)
        reduced, _ = rref(lifted, self.ambient)
        return len(reduced) == self.dim

    def basis_matrix(self) -> "CycMatrix":
        return CycMatrix.from_rows([list(b) for b in self.basis], self.conductor)

    def embed(self, m: int) -> "Subspace":
        if m == self.conductor:
            return self
        return Subspace(self.ambient, m, tuple(tuple(x.embed(m) for x in b) for b in self.basis))


@dataclass(frozen=True)
class CycMatrix:
    rows: int
    cols: int
    entries: tuple[CycNum, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError("Expected %d entries, got %d" % (self.rows * self.cols, len(self.entries)))
        if self.entries:
            n = self.entries[0].conductor
            if any(x.conductor != n for x in self.entries):
                raise ShapeError("Entries must share one conductor")

    # Construction

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[CycNum | int]], conductor: int | None = None) -> "CycMatrix":
        if not rows:
            raise ShapeError("Matrix needs at least one row")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ShapeError("Ragged rows")
        base = conductor or 1
        scalars = [[x if isinstance(x, CycNum) else CycNum.from_fraction(x, base) for x in r] for r in rows]
        n, lifted = _lift_rows(scalars, conductor)
        return cls(len(rows), width, tuple(x for r in lifted for x in r))

    @classmethod
    def identity(cls, size: int, conductor: int = 1) -> "CycMatrix":
        one, zero = CycNum.one(conductor), CycNum.zero(conductor)
        return cls(size, size, tuple(one if i == j else zero for i in range(size) for j in range(size)))

    @classmethod
    def zeros(cls, rows: int, cols: int, conductor: int = 1) -> "CycMatrix":
        return cls(rows, cols, (CycNum.zero(conductor),) * (rows * cols))

    @classmethod
    def diag(cls, values: Sequence[CycNum]) -> "CycMatrix":
        n = len(values)
        conductor = lcm(*(v.conductor for v in values))
        zero = CycNum.zero(conductor)
        return cls(n, n, tuple(values[i].embed(conductor) if i == j else zero for i in range(n) for j in range(n)))

    # Views

    @property
    def conductor(self) -> int:
        return self.entries[0].conductor

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> CycNum:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def row_lists(self) -> list[list[CycNum]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def key(self) -> tuple:
        """Hashable canonical key: reduced coefficient vectors of every entry"""
        return (self.conductor,) + tuple((x.num, x.den) for x in self.entries)

    def is_identity(self) -> bool:
        return self.is_diagonal() and all(self[i, i].is_one() for i in range(self.rows))

    def is_diagonal(self) -> bool:
        return self.is_square and all(
            x.is_zero() for k, x in enumerate(self.entries) if k // self.cols != k % self.cols
        )

    def is_scalar(self) -> bool:
        if not self.is_diagonal():
            return False
        first = self.entries[0]
        return all(self[i, i] == first for i in range(self.rows))

    def is_monomial(self) -> bool:
        """Exactly one nonzero entry in every row and column"""
        if not self.is_square:
            return False
        for i in range(self.rows):
            if sum(1 for x in self.row(i) if x) != 1:
                return False
        return all(sum(1 for x in self.column(j) if x) == 1 for j in range(self.cols))

    def __str__(self) -> str:
        from .io import format_matrix_rows
        return format_matrix_rows(self)

    # Conductor handling

    def embed(self, m: int) -> "CycMatrix":
        if m == self.conductor:
            return self
        return CycMatrix(self.rows, self.cols, tuple(x.embed(m) for x in self.entries))

    def _aligned(self, other: "CycMatrix") -> tuple["CycMatrix", "CycMatrix"]:
        n, m = self.conductor, other.conductor
        if n == m:
            return self, other
        target = lcm(n, m)
        return self.embed(target), other.embed(target)

    # Arithmetic

    def __matmul__(self, other: "CycMatrix") -> "CycMatrix":
        if self.cols != other.rows:
            raise ShapeError("Cannot multiply %dx%d by %dx%d" % (self.rows, self.cols, other.rows, other.cols))
        a, b = self._aligned(other)
        zero = CycNum.zero(a.conductor)
        cols = [b.column(j) for j in range(b.cols)]
        out = []
        for i in range(a.rows):
            row = a.row(i)
            for col in cols:
                acc = zero
                for x, y in zip(row, col):
                    if x and y:
                        acc = acc + x * y
                out.append(acc)
        return CycMatrix(a.rows, b.cols, tuple(out))

    def __add__(self, other: "CycMatrix") -> "CycMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("Shape mismatch in addition")
        a, b = self._aligned(other)
        return CycMatrix(a.rows, a.cols, tuple(x + y for x, y in zip(a.entries, b.entries)))

    def __neg__(self) -> "CycMatrix":
        return CycMatrix(self.rows, self.cols, tuple(-x for x in self.entries))

    def __sub__(self, other: "CycMatrix") -> "CycMatrix":
        return self + (-other)

    def scale(self, c: CycNum | int) -> "CycMatrix":
        if not isinstance(c, CycNum):
            c = CycNum.from_fraction(c, self.conductor)
        m = lcm(self.conductor, c.conductor)
        c = c.embed(m)
        return CycMatrix(self.rows, self.cols, tuple(x.embed(m) * c for x in self.entries))

    def transpose(self) -> "CycMatrix":
        return CycMatrix(self.cols, self.rows, tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def normalized(self) -> "CycMatrix":
        """Scale so the first nonzero entry is 1"""
        lead = next(x for x in self.entries if x)
        if lead.is_one():
            return self
        inv = lead.inverse()
        return CycMatrix(self.rows, self.cols, tuple(x * inv if x else x for x in self.entries))

    def trace(self) -> CycNum:
        if not self.is_square:
            raise ShapeError("Trace of a non-square matrix")
        return sum((self[i, i] for i in range(self.rows)), CycNum.zero(self.conductor))

    def apply_row(self, v: Sequence[CycNum]) -> Vector:
        """Row vector times matrix: v . M"""
        if len(v) != self.rows:
            raise ShapeError("Vector length %d against %d rows" % (len(v), self.rows))
        n = lcm(self.conductor, *(x.conductor for x in v))
        m = self.embed(n)
        v = [x.embed(n) for x in v]
        zero = CycNum.zero(n)
        out = []
        for j in range(m.cols):
            acc = zero
            for i, x in enumerate(v):
                y = m[i, j]
                if x and y:
                    acc = acc + x * y
            out.append(acc)
        return tuple(out)

    def det(self) -> CycNum:
        return det(self)

    def inverse(self) -> "CycMatrix":
        return inverse(self)

    def rank(self) -> int:
        return rank(self)

    def power(self, k: int) -> "CycMatrix":
        if k < 0:
            return self.inverse().power(-k)
        result = CycMatrix.identity(self.rows, self.conductor)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result


def _cofactor_det(rows: list[list[CycNum]], zero: CycNum) -> CycNum:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = zero
    for j, x in enumerate(rows[0]):
        if not x:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = x * _cofactor_det(minor, zero)
        total = total - term if j % 2 else total + term
    return total


def _bareiss_det(rows: list[list[CycNum]], one: CycNum) -> CycNum:
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    prev = one
    for k in range(n - 1):
        if not m[k][k]:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return one - one
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def det(a: CycMatrix) -> CycNum:
    """Cofactor expansion up to 4x4, fraction-free Bareiss elimination beyond"""
    if not a.is_square:
        raise ShapeError("Determinant of a %dx%d matrix" % (a.rows, a.cols))
    rows = a.row_lists()
    if a.rows <= 4:
        return _cofactor_det(rows, CycNum.zero(a.conductor))
    return _bareiss_det(rows, CycNum.one(a.conductor))


def inverse(a: CycMatrix) -> CycMatrix:
    if not a.is_square:
        raise ShapeError("Inverse of a %dx%d matrix" % (a.rows, a.cols))
    n = a.rows
    ident = CycMatrix.identity(n, a.conductor)
    augmented = [a.row_lists()[i] + list(ident.row(i)) for i in range(n)]
    reduced, pivots = rref(augmented, n)
    if pivots[:n] != list(range(n)) or len(reduced) < n:
        raise SingularMatrixError("Matrix is singular")
    return CycMatrix(n, n, tuple(x for r in reduced for x in r[n:]))


def rank(a: CycMatrix) -> int:
    reduced, _ = rref(a.row_lists(), a.cols)
    return len(reduced)


def kernel(a: CycMatrix) -> Subspace:
    """Right kernel {v : A v = 0} as a canonical subspace"""
    reduced, pivots = rref(a.row_lists(), a.cols)
    n = a.conductor
    zero, one = CycNum.zero(n), CycNum.one(n)
    free = [c for c in range(a.cols) if c not in pivots]
    vectors = []
    for f in free:
        v = [zero] * a.cols
        v[f] = one
        for r, p in enumerate(pivots):
            v[p] = -reduced[r][f]
        vectors.append(v)
    return Subspace.from_vectors(vectors, a.cols, n)


def eigenspace(m: CycMatrix, lam: CycNum) -> Subspace:
    """Kernel of M - lam I, lifted to a conductor holding both"""
    if not m.is_square:
        raise ShapeError("Eigenspace of a non-square matrix")
    n = lcm(m.conductor, lam.conductor)
    shifted = m.embed(n) - CycMatrix.identity(m.rows, n).scale(lam.embed(n))
    return kernel(shifted)


def multiplicative_order(m: CycMatrix, cap: int = 10_000) -> int:
    ident = CycMatrix.identity(m.rows, m.conductor)
    power = m
    for k in range(1, cap + 1):
        if power == ident:
            return k
        power = power @ m
    raise ShapeError("Matrix order exceeds %d" % cap)


def eigenspaces(m: CycMatrix) -> list[tuple[CycNum, Subspace]]:
    """All (eigenvalue, eigenspace) pairs of a finite-order matrix, roots of unity only"""
    order = multiplicative_order(m)
    n = lcm(m.conductor, order)
    result = []
    for k in range(order):
        lam = CycNum.root_of_unity(order, k, n)
        space = eigenspace(m, lam)
        if space.dim:
            result.append((lam, space))
    return result
