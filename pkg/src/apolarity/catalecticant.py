"""Catalecticant and apolar embedding of a ternary quartic."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import factorial

from ..cyclotomic.field import CycNum
from ..errors import PolynomialError
from ..invariants.poly import Exponent, SparsePoly, grevlex_monomials
from ..linalg.matrix import CycMatrix

logger = logging.getLogger(__name__)

QUADRICS = tuple(grevlex_monomials(3, 2))
CUBICS = tuple(grevlex_monomials(3, 3))
QUARTICS = tuple(grevlex_monomials(3, 4))


def exponent_factorial(exp: Exponent) -> int:
    out = 1
    for e in exp:
        out *= factorial(e)
    return out


def check_quartic(f: SparsePoly) -> None:
    if f.nvars != 3:
        raise PolynomialError("Expected a ternary form, got %d variables" % f.nvars)
    if not f.is_zero() and (f.degree != 4 or not f.is_homogeneous()):
        raise PolynomialError("Expected a homogeneous quartic, got degree %d" % f.degree)


def divided_coefficient(f: SparsePoly, exp: Exponent) -> CycNum:
    """a_e in f = sum (4!/e!) a_e x^e, so that l^4 has a_e = l^e"""
    return f.coefficient(exp) * Fraction(exponent_factorial(exp), factorial(sum(exp)))


@dataclass(eq=False)
class Catalecticant:
    form: SparsePoly
    matrix: CycMatrix  # rows and columns indexed by QUADRICS

    @cached_property
    def determinant(self) -> CycNum:
        return self.matrix.det()

    @cached_property
    def rank(self) -> int:
        return self.matrix.rank()

    def is_degenerate(self) -> bool:
        return self.determinant.is_zero()


def catalecticant(f: SparsePoly) -> Catalecticant:
    """Entry (m, m') is the divided coefficient of f at m*m'"""
    check_quartic(f)
    rows = [[divided_coefficient(f, tuple(a + b for a, b in zip(m, k))) for k in QUADRICS] for m in QUADRICS]
    return Catalecticant(f, CycMatrix.from_rows(rows, f.conductor))


def is_degenerate(f: SparsePoly) -> bool:
    return catalecticant(f).is_degenerate()


@dataclass(eq=False)
class ApolarEmbedding:
    partials: list[SparsePoly]
    matrix: CycMatrix  # 3 x 10, rows are the partials in the CUBICS basis
    rank: int
    euler_holds: bool

    @property
    def injective(self) -> bool:
        return self.rank == 3


def apolar_embedding(f: SparsePoly) -> ApolarEmbedding:
    """The partial derivatives of f, spanning the image of W in the cubics"""
    check_quartic(f)
    partials = f.gradient()
    matrix = CycMatrix.from_rows([p.coefficient_vector(CUBICS) for p in partials], f.conductor)
    x = SparsePoly.variables(3)
    euler = sum((x[i] * partials[i] for i in range(3)), SparsePoly.zero(3))
    return ApolarEmbedding(partials, matrix, matrix.rank(), euler == f.scale(4))
