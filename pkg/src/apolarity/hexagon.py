"""Power-sum systems: is a quartic a combination of fourth powers of six given lines."""
import logging
from dataclasses import dataclass, field
from math import lcm
from typing import Sequence

from ..cyclotomic.field import CycNum
from ..cyclotomic.text import format_cyc
from ..errors import ProportionalLinesError, PolynomialError
from ..invariants.poly import SparsePoly, linear_form
from ..linalg.matrix import CycMatrix, rref
from .catalecticant import QUARTICS, check_quartic

logger = logging.getLogger(__name__)

SOLVED = "solved"
INCONSISTENT = "inconsistent"


@dataclass(eq=False)
class HexagonSystem:
    quartic: SparsePoly
    lines: list[SparsePoly]
    matrix: CycMatrix  # 15 x 6, column j is l_j^4 in the QUARTICS basis
    target: list[CycNum]

    @property
    def conductor(self) -> int:
        return self.matrix.conductor


@dataclass
class SolveResult:
    status: str
    system_rank: int
    augmented_rank: int
    multipliers: list[CycNum] | None = None
    unique: bool = False
    lines: list[str] = field(default_factory=list)

    @property
    def solved(self) -> bool:
        return self.status == SOLVED

    def to_dict(self) -> dict:
        out = {
            "status": self.status,
            "system_rank": self.system_rank,
            "augmented_rank": self.augmented_rank,
            "lines": self.lines,
        }
        if self.multipliers is not None:
            out["multipliers"] = [format_cyc(m) for m in self.multipliers]
            out["unique"] = self.unique
        return out


def _check_lines(lines: Sequence[SparsePoly]) -> None:
    for l in lines:
        if l.nvars != 3 or l.degree != 1 or not l.is_homogeneous():
            raise PolynomialError("%s is not a linear form in three variables" % l)
    for i in range(len(lines)):
        for j in range(i):
            if lines[i].is_proportional(lines[j]):
                raise ProportionalLinesError("Lines %s and %s are proportional" % (lines[j], lines[i]))


def hexagon_system(f: SparsePoly, lines: Sequence[SparsePoly], conductor: int = 1) -> HexagonSystem:
    """Coefficient system of sum mu_i l_i^4 = f over Q(zeta_n), n a multiple of `conductor`"""
    check_quartic(f)
    _check_lines(lines)
    n = lcm(conductor, f.conductor, *(l.conductor for l in lines))
    powers = [l.embed(n) ** 4 for l in lines]
    rows = [[p.coefficient(m) for p in powers] for m in QUARTICS]
    target = f.embed(n).coefficient_vector(QUARTICS)
    return HexagonSystem(f, list(lines), CycMatrix.from_rows(rows, n), target)


def solve_system(system: HexagonSystem) -> SolveResult:
    """Exact Gauss-Jordan on (A | F); a pivot in the last column certifies inconsistency"""
    n = system.conductor
    width = system.matrix.cols
    augmented = [list(system.matrix.row(i)) + [system.target[i]] for i in range(system.matrix.rows)]
    reduced, pivots = rref(augmented, width + 1)
    system_rank = sum(1 for p in pivots if p < width)
    names = [str(l) for l in system.lines]
    if width in pivots:
        logger.debug("Power-sum system inconsistent: rank %d, augmented rank %d", system_rank, len(pivots))
        return SolveResult(INCONSISTENT, system_rank, len(pivots), lines=names)
    mu = [CycNum.zero(n)] * width
    for r, p in enumerate(pivots):
        mu[p] = reduced[r][width]
    return SolveResult(SOLVED, system_rank, system_rank, mu, system_rank == width, names)


def powersum_solve(f: SparsePoly, lines: Sequence[SparsePoly], conductor: int = 1) -> SolveResult:
    """Multipliers mu with sum mu_i l_i^4 == f, or a rank certificate that none exist"""
    result = solve_system(hexagon_system(f, lines, conductor))
    logger.info("Power-sum solve over %d lines: %s", len(lines), result.status)
    return result


def combine(lines: Sequence[SparsePoly], mu: Sequence[CycNum]) -> SparsePoly:
    total = SparsePoly.zero(3)
    for l, m in zip(lines, mu):
        total = total + (l ** 4).scale(m)
    return total


# Named cases

def z4_lines() -> list[SparsePoly]:
    """x -+ iz, y +- ix, z +- iy"""
    i = CycNum.zeta(4)
    one = CycNum.one(4)
    zero = CycNum.zero(4)
    return [
        linear_form([one, zero, -i]),
        linear_form([one, zero, i]),
        linear_form([i, one, zero]),
        linear_form([-i, one, zero]),
        linear_form([zero, i, one]),
        linear_form([zero, -i, one]),
    ]


def final_lines() -> list[SparsePoly]:
    """Linear factors of (x^2 - z^2)(y^2 - x^2)(z^2 - y^2)"""
    return [
        linear_form([1, 0, -1]),
        linear_form([1, 0, 1]),
        linear_form([-1, 1, 0]),
        linear_form([1, 1, 0]),
        linear_form([0, -1, 1]),
        linear_form([0, 1, 1]),
    ]


HEXAGON_CASES = {"z4": z4_lines, "final": final_lines}
