"""Riemann-Hurwitz branch data, curve orbit sizes, Castelnuovo bounds and orbit sums."""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from ..errors import ArgumentError
from ..groups.group import FiniteMatrixGroup
from ..groups.subgroups import cyclic_orbit_sizes

logger = logging.getLogger(__name__)

GROUP_ORDER = 168
# stabilizer order -> coefficient of its orbit count in 2g - 2
BRANCH_WEIGHTS = {2: 84, 3: 112, 4: 126, 7: 144}
LONG_ORBIT_SIZES = (24, 42, 56, 84, 168)


@dataclass(frozen=True)
class BranchDatum:
    quotient_genus: int
    genus: int
    a2: int
    a3: int
    a4: int
    a7: int

    def satisfies_identity(self) -> bool:
        rhs = (GROUP_ORDER * (2 * self.quotient_genus - 2) + BRANCH_WEIGHTS[2] * self.a2
               + BRANCH_WEIGHTS[3] * self.a3 + BRANCH_WEIGHTS[4] * self.a4 + BRANCH_WEIGHTS[7] * self.a7)
        return 2 * self.genus - 2 == rhs

    @property
    def orbit_counts(self) -> tuple[int, int, int, int]:
        """Counts of the 24-, 42-, 56- and 84-point orbits"""
        return (self.a7, self.a4, self.a3, self.a2)

    def sort_key(self) -> tuple:
        return (self.genus, self.quotient_genus, self.a2, self.a3, self.a4, self.a7)

    def to_dict(self) -> dict:
        return {
            "g": self.genus,
            "quotient_genus": self.quotient_genus,
            "24": self.a7,
            "42": self.a4,
            "56": self.a3,
            "84": self.a2,
        }


def rh_enumerate(g_max: int, slack: int = 1) -> list[BranchDatum]:
    """Every branch datum with 2 <= g <= g_max, by bounded search.

    Each count is bounded by what keeps 2g - 2 within reach of g_max; `slack`
    multiplies every bound, so a larger value must not add rows.
    """
    if g_max < 2:
        raise ArgumentError("g_max must be at least 2, got %d" % g_max)
    if slack < 1:
        raise ArgumentError("slack must be positive, got %d" % slack)
    top = 2 * g_max - 2
    # quotient genus q contributes 168(2q - 2) >= 336(q - 1)
    q_max = slack * (top // (2 * GROUP_ORDER) + 1)
    out = []
    for q in range(q_max + 1):
        base = GROUP_ORDER * (2 * q - 2)
        room = top - base
        if room < 0:
            break
        limits = {k: slack * (room // w) for k, w in BRANCH_WEIGHTS.items()}
        for a7 in range(limits[7] + 1):
            s7 = base + BRANCH_WEIGHTS[7] * a7
            for a4 in range(limits[4] + 1):
                s4 = s7 + BRANCH_WEIGHTS[4] * a4
                for a3 in range(limits[3] + 1):
                    s3 = s4 + BRANCH_WEIGHTS[3] * a3
                    for a2 in range(limits[2] + 1):
                        total = s3 + BRANCH_WEIGHTS[2] * a2
                        if total % 2 or total > top:
                            continue
                        g = total // 2 + 1
                        if g >= 2:
                            out.append(BranchDatum(q, g, a2, a3, a4, a7))
    out.sort(key=BranchDatum.sort_key)
    logger.info("Riemann-Hurwitz: %d branch data with g <= %d", len(out), g_max)
    return out


def curve_orbit_sizes(group: FiniteMatrixGroup) -> set[int]:
    """Orbit sizes on a curve: stabilizers of points on a curve are cyclic"""
    return cyclic_orbit_sizes(group)


def castelnuovo(d: int) -> int:
    """Upper bound for the genus of a nondegenerate irreducible space curve of degree d"""
    if d < 3:
        raise ArgumentError("Castelnuovo bound needs d >= 3, got %d" % d)
    if d % 2 == 0:
        return (d - 2) ** 2 // 4
    return (d - 1) * (d - 3) // 4


@lru_cache(maxsize=None)
def _witnesses(m: int, sizes: tuple[int, ...]) -> list[tuple[int, ...] | None]:
    """Smallest-lexicographic witness for every total up to m"""
    table: list[tuple[int, ...] | None] = [None] * (m + 1)
    table[0] = (0,) * len(sizes)
    for total in range(1, m + 1):
        for i, s in enumerate(sizes):
            if s <= total and table[total - s] is not None:
                prev = table[total - s]
                table[total] = prev[:i] + (prev[i] + 1,) + prev[i + 1:]
                break
    return table


def orbit_sum_witness(m: int, sizes: Sequence[int] | None = None) -> tuple[int, ...] | None:
    """Counts n_i with sum n_i * sizes[i] == m, or None"""
    if m < 0:
        raise ArgumentError("m must be non-negative, got %d" % m)
    sizes = tuple(sizes) if sizes is not None else LONG_ORBIT_SIZES
    if not sizes or any(s < 1 for s in sizes):
        raise ArgumentError("Orbit sizes must be positive: %s" % (sizes,))
    return _witnesses(m, sizes)[m]


def representable_as_orbit_sum(m: int, sizes: Sequence[int] | None = None) -> bool:
    return orbit_sum_witness(m, sizes) is not None
