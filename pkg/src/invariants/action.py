"""Linear substitution x -> x.M on polynomials, Reynolds averaging, invariant dimensions."""
import logging
from math import lcm
from typing import Sequence

from ..characters.classfunc import ClassFunction, character_of, multiplicity, sym_power
from ..cyclotomic.field import CycNum
from ..errors import PolynomialError
from ..groups.group import FiniteMatrixGroup
from ..linalg.matrix import CycMatrix, rref
from .poly import Exponent, SparsePoly, monomials

logger = logging.getLogger(__name__)


class Substitution:
    """The substitution x_j -> (x.M)_j = sum_i x_i M[i, j], with cached powers and products.

    Reusing one instance across many polynomials shares the cached products.
    """

    def __init__(self, matrix: CycMatrix, conductor: int = 1):
        if not matrix.is_square:
            raise PolynomialError("Substitution matrix must be square")
        self.nvars = matrix.rows
        self.conductor = lcm(matrix.conductor, conductor)
        self.matrix = matrix.embed(self.conductor)
        self.monomial = self.matrix.is_monomial()
        n = self.nvars
        if self.monomial:
            # x_j -> c_j * x_{source[j]}
            self._source = [next(i for i in range(n) if self.matrix[i, j]) for j in range(n)]
            self._scale = [self.matrix[self._source[j], j] for j in range(n)]
        else:
            self._images = []
            for j in range(n):
                terms = {}
                for i in range(n):
                    c = self.matrix[i, j]
                    if c:
                        terms[tuple(1 if k == i else 0 for k in range(n))] = c
                self._images.append(SparsePoly._trusted(n, terms, self.conductor))
        self._powers: list[dict[int, SparsePoly]] = [{} for _ in range(n)]
        self._prefix: dict[Exponent, SparsePoly] = {}

    def _power(self, j: int, k: int) -> SparsePoly:
        cache = self._powers[j]
        if k not in cache:
            if k == 0:
                cache[k] = SparsePoly._trusted(self.nvars, {(0,) * self.nvars: CycNum.one(self.conductor)}, self.conductor)
            else:
                cache[k] = self._power(j, k - 1) * self._images[j]
        return cache[k]

    def _product(self, prefix: Exponent) -> SparsePoly:
        """Image of the monomial whose leading exponents are `prefix` (later ones zero)"""
        if not prefix:
            return self._power(0, 0)
        hit = self._prefix.get(prefix)
        if hit is None:
            head = self._product(prefix[:-1])
            k = prefix[-1]
            hit = head if k == 0 else head * self._power(len(prefix) - 1, k)
            self._prefix[prefix] = hit
        return hit

    def image(self, exp: Exponent) -> SparsePoly:
        if self.monomial:
            c = CycNum.one(self.conductor)
            target = [0] * self.nvars
            for j, k in enumerate(exp):
                if k:
                    c = c * self._scale[j] ** k
                    target[self._source[j]] += k
            return SparsePoly._trusted(self.nvars, {tuple(target): c}, self.conductor)
        # drop trailing zeros so prefixes are shared
        last = max((i for i, k in enumerate(exp) if k), default=-1)
        return self._product(tuple(exp[:last + 1]))

    def apply(self, f: SparsePoly) -> SparsePoly:
        if f.nvars != self.nvars:
            raise PolynomialError("Polynomial in %d variables, matrix of size %d" % (f.nvars, self.nvars))
        n = lcm(self.conductor, f.conductor)
        if n != self.conductor:
            return Substitution(self.matrix, n).apply(f)
        acc: dict[Exponent, CycNum] = {}
        for exp, c in f.terms.items():
            for e, v in self.image(exp).terms.items():
                p = c * v
                acc[e] = acc[e] + p if e in acc else p
        return SparsePoly._trusted(f.nvars, {e: c for e, c in acc.items() if c}, n)


def act(matrix: CycMatrix, f: SparsePoly) -> SparsePoly:
    """f(x.M), the row-vector substitution; act(M @ N, f) == act(M, act(N, f))"""
    if matrix.rows != f.nvars:
        raise PolynomialError("Matrix of size %d acting on %d variables" % (matrix.rows, f.nvars))
    if f.is_zero():
        return f
    return Substitution(matrix, f.conductor).apply(f)


def is_invariant(f: SparsePoly, gens: Sequence[CycMatrix]) -> bool:
    for g in gens:
        if act(g, f) != f:
            return False
    return True


class ReynoldsOperator:
    """(1/|G|) sum_g act(g, f), computed through the diagonal subgroup D.

    Averaging over D keeps only monomials of trivial D-weight, so the full
    average is |D|/|G| times the sum over left coset representatives gD.
    """

    def __init__(self, group: FiniteMatrixGroup):
        if group.projective:
            raise PolynomialError("Reynolds averaging needs a linear group, not a projectivized one")
        self.group = group
        self.conductor = group.conductor
        self.diagonal = [g for g in range(group.order) if group.elements[g].is_diagonal()]
        seen = [False] * group.order
        self.representatives = []
        for g in range(group.order):
            if seen[g]:
                continue
            self.representatives.append(g)
            for d in self.diagonal:
                seen[int(group.mul[g, d])] = True
        self._weights = [
            [group.elements[d][i, i] for i in range(group.dimension)] for d in self.diagonal
        ]
        self._subs = [Substitution(group.elements[r]) for r in self.representatives]
        self.factor = CycNum.from_fraction(len(self.diagonal), 1) / group.order
        logger.debug("Reynolds operator: |D| = %d, %d coset representatives",
                     len(self.diagonal), len(self.representatives))

    def is_diagonal_trivial(self, exp: Exponent) -> bool:
        for weights in self._weights:
            value = CycNum.one(self.conductor)
            for w, k in zip(weights, exp):
                if k:
                    value = value * w ** k
            if not value.is_one():
                return False
        return True

    def __call__(self, f: SparsePoly) -> SparsePoly:
        kept = {e: c for e, c in f.terms.items() if self.is_diagonal_trivial(e)}
        if not kept:
            return SparsePoly.zero(f.nvars, lcm(f.conductor, self.conductor))
        f_d = SparsePoly(f.nvars, kept, f.conductor)
        total = SparsePoly.zero(f.nvars, lcm(f.conductor, self.conductor))
        for sub in self._subs:
            total = total + sub.apply(f_d)
        return total.scale(self.factor)


def reynolds(group: FiniteMatrixGroup, f: SparsePoly) -> SparsePoly:
    return ReynoldsOperator(group)(f)


def invariant_dim_by_character(group: FiniteMatrixGroup, d: int) -> int:
    """Trivial multiplicity in Sym^d of the defining character"""
    chi = character_of(group)
    return multiplicity(sym_power(chi, d), ClassFunction.constant(group, 1))


def invariant_basis(group: FiniteMatrixGroup, d: int, operator: ReynoldsOperator | None = None) -> list[SparsePoly]:
    """Echelon basis of the degree-d invariants, from Reynolds images of monomials"""
    operator = operator or ReynoldsOperator(group)
    basis = monomials(group.dimension, d)
    images = [operator(SparsePoly.monomial(m)) for m in basis if operator.is_diagonal_trivial(m)]
    images = [p for p in images if p]
    if not images:
        return []
    rows = [p.coefficient_vector(basis) for p in images]
    reduced, _ = rref(rows, len(basis))
    return [SparsePoly.from_coefficients(group.dimension, zip(basis, row)) for row in reduced]


def invariant_dim_by_reynolds(group: FiniteMatrixGroup, d: int, operator: ReynoldsOperator | None = None) -> int:
    return len(invariant_basis(group, d, operator))


def invariant_dim(group: FiniteMatrixGroup, d: int, operator: ReynoldsOperator | None = None) -> int:
    """Dimension of degree-d invariants, by characters and by Reynolds rank; both must agree"""
    if d < 1:
        raise PolynomialError("Degree must be positive, got %d" % d)
    by_character = invariant_dim_by_character(group, d)
    by_reynolds = invariant_dim_by_reynolds(group, d, operator)
    if by_character != by_reynolds:
        raise PolynomialError(
            "Degree %d invariants: character count %d, Reynolds rank %d" % (d, by_character, by_reynolds)
        )
    return by_character


def _poly_det(rows: list[list[SparsePoly]]) -> SparsePoly:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = SparsePoly.zero(rows[0][0].nvars)
    for j, x in enumerate(rows[0]):
        if x.is_zero():
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = x * _poly_det(minor)
        total = total - term if j % 2 else total + term
    return total


def hessian(f: SparsePoly) -> SparsePoly:
    """Determinant of the matrix of second partials"""
    if not f.is_homogeneous():
        raise PolynomialError("Hessian of a non-homogeneous polynomial")
    grad = f.gradient()
    return _poly_det([[g.diff(j) for j in range(f.nvars)] for g in grad])
