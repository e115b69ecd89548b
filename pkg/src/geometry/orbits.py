"""Orbits, fixed loci and the special orbits of the order-168 group."""
import logging
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd, lcm
from typing import Sequence

from ..cyclotomic.field import CycNum
from ..errors import GeometryError
from ..groups.group import FiniteMatrixGroup, closure, lift
from ..groups.subgroups import SubgroupHandle, all_subgroup_classes
from ..invariants.poly import SparsePoly, monomials
from ..linalg.matrix import CycMatrix, Subspace, kernel, multiplicative_order
from .points import ProjPoint, proportional

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class OrbitRecord:
    label: str
    points: list[ProjPoint]  # canonically sorted, one conductor
    stabilizer: SubgroupHandle  # of points[0]

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def stabilizer_order(self) -> int:
        return self.stabilizer.order

    @property
    def stabilizer_label(self) -> str:
        return self.stabilizer.label

    @property
    def conductor(self) -> int:
        return self.points[0].conductor

    @cached_property
    def _set(self) -> frozenset[ProjPoint]:
        return frozenset(self.points)

    def __contains__(self, p: ProjPoint) -> bool:
        return p in self._set

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "size": self.size,
            "stabilizer_order": self.stabilizer_order,
            "stabilizer": self.stabilizer_label,
            "representative": str(self.points[0]),
        }


def _generating_subset(group: FiniteMatrixGroup, members: Sequence[int]) -> tuple[int, ...]:
    gens: list[int] = []
    current: tuple[int, ...] = (0,)
    for m in members:
        if m not in current:
            gens.append(m)
            current = closure(group, gens)
    return tuple(gens) or (0,)


def stabilizer(group: FiniteMatrixGroup, p: ProjPoint) -> SubgroupHandle:
    members = tuple(g for g in range(group.order) if p.is_fixed_by(group.elements[g]))
    return SubgroupHandle(group, members, _generating_subset(group, members))


def orbit(group: FiniteMatrixGroup, p: ProjPoint, label: str = "") -> OrbitRecord:
    """Breadth-first orbit under the generators, with the stabilizer by direct test"""
    gens = [group.elements[g] for g in group.generators]
    start = p.embed(lcm(p.conductor, group.conductor))
    seen = {start}
    queue = [start]
    for q in queue:
        for g in gens:
            r = q.apply(g)
            if r not in seen:
                seen.add(r)
                queue.append(r)
    points = sorted(queue, key=ProjPoint.sort_key)
    stab = stabilizer(group, points[0])
    if len(points) * stab.order != group.order:
        raise GeometryError(
            "Orbit of size %d with stabilizer of order %d in a group of order %d"
            % (len(points), stab.order, group.order)
        )
    logger.debug("Orbit of size %d, stabilizer %s", len(points), stab.label)
    return OrbitRecord(label or "orbit-%d" % len(points), points, stab)


# Fixed loci

@dataclass
class FixedLocus:
    """Components are the joint eigenspaces; a 1-dim component is an isolated point"""

    components: list[Subspace] = field(default_factory=list)

    @property
    def points(self) -> list[ProjPoint]:
        return [ProjPoint.from_coords(c.basis[0]) for c in self.components if c.dim == 1]

    @property
    def positive(self) -> list[Subspace]:
        """Components of positive projective dimension"""
        return [c for c in self.components if c.dim > 1]


def _restricted_eigenspace(component: Subspace, matrix: CycMatrix, lam: CycNum) -> Subspace:
    """{v in V : v.M = lam v}"""
    n = lcm(component.conductor, matrix.conductor, lam.conductor)
    basis = component.basis_matrix().embed(n)
    shifted = basis @ (matrix.embed(n) - CycMatrix.identity(matrix.rows, n).scale(lam.embed(n)))
    coefficients = kernel(shifted.transpose())
    if not coefficients.dim:
        return coefficients
    vectors = [basis.apply_row(c) for c in coefficients.basis]
    return Subspace.from_vectors(vectors, component.ambient, n)


def _refine(component: Subspace, matrix: CycMatrix, order: int) -> list[Subspace]:
    if component.dim == 1:
        v = component.basis[0]
        return [component] if proportional(v, matrix.apply_row(v)) else []
    out = []
    for k in range(order):
        g = gcd(k, order)
        exact = order // g
        n = lcm(component.conductor, matrix.conductor, exact)
        piece = _restricted_eigenspace(component, matrix, CycNum.root_of_unity(exact, k // g, n))
        if piece.dim:
            out.append(piece)
    return out


def joint_fixed_locus(matrices: Sequence[CycMatrix], orders: Sequence[int]) -> FixedLocus:
    """Common eigenvectors of finite-order matrices, up to scalars (row-vector action)"""
    if not matrices:
        raise GeometryError("Need at least one matrix")
    size = matrices[0].rows
    components = [Subspace.full(size, matrices[0].conductor)]
    # larger orders tend to have smaller eigenspaces
    for matrix, order in sorted(zip(matrices, orders), key=lambda t: -t[1]):
        components = [piece for c in components for piece in _refine(c, matrix, order)]
        if not components:
            break
    return FixedLocus(components)


def _linear_generators(handle: SubgroupHandle) -> tuple[list[CycMatrix], list[int]]:
    parent = handle.parent
    if parent.projective:
        ids = [lift(parent, g) for g in handle.generators]
        cover = parent.cover
        return [cover.elements[i] for i in ids], [int(cover.element_orders[i]) for i in ids]
    return [parent.elements[g] for g in handle.generators], [int(parent.element_orders[g]) for g in handle.generators]


def fixed_points(target: CycMatrix | SubgroupHandle, order: int | None = None) -> FixedLocus:
    """Fixed locus of one finite-order matrix, or of a subgroup through its generators"""
    if isinstance(target, SubgroupHandle):
        matrices, orders = _linear_generators(target)
        return joint_fixed_locus(matrices, orders)
    if order is None:
        order = multiplicative_order(target)
    return joint_fixed_locus([target], [order])


def pointwise_stabilizer(group: FiniteMatrixGroup, component: Subspace) -> list[int]:
    """Elements acting as a scalar on the whole component"""
    vectors = [list(b) for b in component.basis]
    total = [sum(col[1:], col[0]) for col in zip(*vectors)]
    out = []
    for g in range(group.order):
        m = group.elements[g]
        if all(proportional(v, m.apply_row(v)) for v in vectors + [total]):
            out.append(g)
    return out


# Special orbits

@dataclass
class SpecialOrbits:
    sigma8: OrbitRecord
    sigma24: OrbitRecord
    sigma28: OrbitRecord
    sigma28p: OrbitRecord
    census: list[OrbitRecord]  # every orbit of size at most the index bound

    def as_dict(self) -> dict[str, OrbitRecord]:
        return {"sigma8": self.sigma8, "sigma24": self.sigma24, "sigma28": self.sigma28, "sigma28p": self.sigma28p}


def small_orbits(group: FiniteMatrixGroup, index_bound: int) -> list[OrbitRecord]:
    """All orbits of size <= index_bound: fixed points of every subgroup of index <= index_bound"""
    min_order = -(-group.order // index_bound)
    found: list[OrbitRecord] = []
    for handle in all_subgroup_classes(group, min_order):
        locus = fixed_points(handle)
        if locus.positive:
            raise GeometryError(
                "Subgroup %s of order %d fixes a positive-dimensional locus" % (handle.label, handle.order)
            )
        for p in locus.points:
            if any(p in o for o in found):
                continue
            found.append(orbit(group, p))
    n = _common(found)
    found.sort(key=lambda o: (o.size, o.points[0].embed(n).sort_key()))
    return found


def _common(orbits: Sequence[OrbitRecord]) -> int:
    return lcm(*(o.conductor for o in orbits)) if orbits else 1


def special_orbits_p3(group: FiniteMatrixGroup, index_bound: int = 41) -> SpecialOrbits:
    census = small_orbits(group, index_bound)
    sizes = [o.size for o in census]
    if sizes != [8, 24, 28, 28]:
        raise GeometryError("Orbits of size <= %d have sizes %s, expected [8, 24, 28, 28]" % (index_bound, sizes))
    sigma8, sigma24, first, second = census
    # the 28-orbit with the smaller least point comes first
    n = _common(census)
    if second.points[0].embed(n).sort_key() < first.points[0].embed(n).sort_key():
        first, second = second, first
    sigma8.label, sigma24.label, first.label, second.label = "sigma8", "sigma24", "sigma28", "sigma28p"
    logger.info("Special orbits: %s", ", ".join("%s(%d, %s)" % (o.label, o.size, o.stabilizer_label) for o in census))
    return SpecialOrbits(sigma8, sigma24, first, second, census)


@dataclass
class OrbitCensus:
    minimum: int
    witness: OrbitRecord | None  # an isolated-point orbit realising the minimum, if any
    sizes: list[int]  # every orbit size met among points with nontrivial stabilizer


def min_orbit_size_p2(group: FiniteMatrixGroup) -> OrbitCensus:
    """Smallest orbit on the plane, over fixed points of every nontrivial subgroup"""
    sizes: set[int] = set()
    best: tuple[int, OrbitRecord | None] | None = None
    seen: list[OrbitRecord] = []
    for handle in all_subgroup_classes(group, 2):
        locus = fixed_points(handle)
        for p in locus.points:
            if any(p in o for o in seen):
                continue
            record = orbit(group, p)
            seen.append(record)
            sizes.add(record.size)
            if best is None or record.size < best[0]:
                best = (record.size, record)
        for component in locus.positive:
            if component.dim == component.ambient:
                continue
            size = group.order // len(pointwise_stabilizer(group, component))
            sizes.add(size)
            if best is None or size < best[0]:
                best = (size, None)
    if best is None:
        raise GeometryError("No point with a nontrivial stabilizer")
    logger.info("Plane orbit sizes with nontrivial stabilizer: %s", sorted(sizes))
    return OrbitCensus(best[0], best[1], sorted(sizes))


# Linear conditions

def evaluation_matrix(points: Sequence[ProjPoint], d: int) -> CycMatrix:
    n = lcm(*(p.conductor for p in points))
    basis = monomials(points[0].dimension + 1, d)
    rows = []
    for p in points:
        coords = p.embed(n).coords
        rows.append([SparsePoly.monomial(m).evaluate(coords) for m in basis])
    return CycMatrix.from_rows(rows, n)


def conditions_rank(points: Sequence[ProjPoint], d: int) -> int:
    """Rank of the degree-d monomials evaluated at the points"""
    if not points:
        return 0
    return evaluation_matrix(points, d).rank()


def vanishing_profile(record: OrbitRecord, polys: dict[str, SparsePoly]) -> dict[str, bool]:
    return {name: all(f.evaluate(p.coords).is_zero() for p in record.points) for name, f in polys.items()}

