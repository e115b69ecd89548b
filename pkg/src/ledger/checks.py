"""Every check the report runs, registered by id.

A check takes the shared Workbench and returns an Outcome. Payloads hold
exact values only: integers, booleans and cyc(...) text.
"""
import logging
import random
from collections import defaultdict

import numpy as np

from ..apolarity.catalecticant import apolar_embedding, catalecticant
from ..apolarity.hexagon import combine, final_lines, powersum_solve, z4_lines
from ..apolarity.skew import skew_form_check
from ..characters.classfunc import ClassFunction, ext_power, inner, sym_power
from ..characters.restrict import restrict
from ..characters.table import EPSILON, PSL_LABELS, CharacterTable
from ..cyclotomic.field import CycNum
from ..cyclotomic.text import format_cyc
from ..diophantine.solvers import (
    LONG_ORBIT_SIZES,
    castelnuovo,
    curve_orbit_sizes,
    orbit_sum_witness,
    rh_enumerate,
)
from ..errors import CharacterError, PolynomialError
from ..geometry.orbits import conditions_rank, min_orbit_size_p2, vanishing_profile
from ..groebner.buchberger import buchberger, is_groebner
from ..groebner.dimension import ideal_dimension, is_smooth_hypersurface
from ..groebner.modular import PrimeFieldPoly
from ..groups.classes import class_sizes
from ..groups.standard import sl_generators
from ..groups.subgroups import transitive_orbit_sizes
from ..invariants.action import act, invariant_dim, invariant_dim_by_character, is_invariant
from ..invariants.klein import InvariantCatalog, leading_coefficient_matches
from ..invariants.poly import SparsePoly, grevlex_monomials, linear_form, monomials
from ..linalg.matrix import CycMatrix
from .registry import expect, registry, reported

logger = logging.getLogger(__name__)

PSL_CLASS_SIZES = [1, 21, 24, 24, 42, 56]
SL_CLASS_SIZES = [1, 1, 24, 24, 24, 24, 42, 42, 42, 56, 56]
PERMUTATION_SIZES = {1, 7, 8, 14, 21, 24, 28}

# genus: (a7, a4, a3, a2), in printed row order
GENERA_TABLE = [
    (3, 1, 0, 1, 1),
    (8, 0, 1, 2, 0),
    (10, 1, 1, 0, 1),
    (15, 0, 2, 1, 0),
    (15, 0, 0, 1, 3),
    (17, 1, 0, 2, 0),
    (19, 2, 0, 0, 1),
    (22, 0, 3, 0, 0),
    (22, 0, 1, 0, 3),
    (24, 1, 1, 1, 0),
    (29, 0, 0, 2, 2),
]


def _same(a: CycNum, b: CycNum | int) -> bool:
    return (a - b).is_zero()


def _grid(table: CharacterTable) -> dict[str, list[str]]:
    return {label: [format_cyc(v) for v in row.values] for label, row in zip(table.labels, table.rows)}


# Groups

@registry.check("group-orders", "closure of the generator files")
def group_orders(wb):
    g = wb.groups
    orders = {"cover": g.cover.order, "space": g.space.order, "plane": g.plane.order}
    return expect(orders == {"cover": 336, "space": 168, "plane": 168}, **orders)


@registry.check("class-sizes", "conjugacy classes of both groups")
def class_sizes_check(wb):
    g = wb.groups
    sizes = {
        "space": sorted(class_sizes(g.space)),
        "plane": sorted(class_sizes(g.plane)),
        "cover": sorted(class_sizes(g.cover)),
    }
    ok = sizes["space"] == PSL_CLASS_SIZES and sizes["plane"] == PSL_CLASS_SIZES and sizes["cover"] == SL_CLASS_SIZES
    return expect(ok, **sizes)


@registry.check("subgroup-census", "subgroups of the order-168 group")
def subgroup_census(wb):
    by_order = defaultdict(list)
    for handle in wb.subgroup_classes("space"):
        by_order[handle.order].append("%s x%d" % (handle.label, handle.class_size))
    return reported(classes=sum(len(v) for v in by_order.values()),
                    by_order={str(k): by_order[k] for k in sorted(by_order)})


@registry.check("isomorphism-certificate", "plane group and projectivized space group")
def isomorphism_certificate(wb):
    plane, space = wb.groups.plane, wb.groups.space
    phi = wb.cover_tables.isomorphism
    bijective = len(set(phi.tolist())) == plane.order == space.order
    homomorphism = bool(np.array_equal(phi[plane.mul], space.mul[np.ix_(phi, phi)]))
    return expect(bijective and homomorphism, bijective=bijective, homomorphism=homomorphism,
                  generator_images=[int(phi[g]) for g in plane.generators])


# Characters

def _expected_psl_rows() -> dict[str, dict[str, CycNum]]:
    e, eb = EPSILON, EPSILON.conj()
    columns = ["(1)", "(2)", "(3)", "(4)", "(7)", "(7')"]
    rows = {
        "I": [1, 1, 1, 1, 1, 1],
        "W3": [3, -1, 0, 1, e, eb],
        "W3d": [3, -1, 0, 1, eb, e],
        "W6": [6, 2, 0, 0, -1, -1],
        "W7": [7, -1, 1, -1, 0, 0],
        "W8": [8, 0, -1, 0, 1, 1],
    }
    return {
        label: {c: v if isinstance(v, CycNum) else CycNum.from_int(v) for c, v in zip(columns, values)}
        for label, values in rows.items()
    }


@registry.check("psl-table-values", "character table of the order-168 group")
def psl_table_values(wb):
    table = wb.psl_table
    expected = _expected_psl_rows()
    mismatches = []
    for label, row in zip(table.labels, table.rows):
        for class_label, value in zip(table.class_labels, row.values):
            if not _same(value, expected[label][class_label]):
                mismatches.append("%s at %s" % (label, class_label))
    return expect(table.labels == PSL_LABELS and not mismatches,
                  classes=table.class_labels, characters=_grid(table), mismatches=mismatches)


@registry.check("appendix-b-orthogonality", "orthogonality of the order-168 table")
def orthogonality(wb):
    table = wb.psl_table
    try:
        table.verify()
    except CharacterError as e:
        return expect(False, error=str(e))
    squares = sum(d * d for d in table.degrees)
    return expect(squares == 168, degrees=table.degrees, sum_of_squares=squares)


@registry.check("cover-rows", "faithful characters of the double cover")
def cover_rows(wb):
    tables = wb.cover_tables
    table = tables.table
    norms, overlaps = {}, {}
    for label in ("U4", "U8"):
        chi = table[label]
        norms[label] = format_cyc(inner(chi, chi))
        overlaps[label] = [psi for psi in PSL_LABELS if not inner(chi, table[psi]).is_zero()]
    ok = all(_same(inner(table[l], table[l]), 1) for l in ("U4", "U8")) and not any(overlaps.values())
    ok = ok and inner(table["U4"], table["U8"]).is_zero()
    return expect(ok, norms=norms, overlaps=overlaps, classes=table.class_labels,
                  u4=_grid(table)["U4"], u8=_grid(table)["U8"], u4_alpha_bar_class=tables.u4_alpha_bar_class)


def _decomposition(table: CharacterTable, chi: ClassFunction, expected: dict[str, int], **extra):
    found = table.decompose(chi)
    return expect(found == expected and all(extra.values()), decomposition=found, **extra)


@registry.check("sym2-w3", "symmetric square of W3")
def sym2_w3(wb):
    t = wb.psl_table
    return _decomposition(t, sym_power(t["W3"], 2), {"W6": 1},
                          same_for_dual=sym_power(t["W3d"], 2) == sym_power(t["W3"], 2))


@registry.check("ext2-w3d", "exterior square of the dual of W3")
def ext2_w3d(wb):
    t = wb.psl_table
    return _decomposition(t, ext_power(t["W3d"], 2), {"W3": 1})


@registry.check("sym3-w3d", "symmetric cube of the dual of W3")
def sym3_w3d(wb):
    t = wb.psl_table
    return _decomposition(t, sym_power(t["W3d"], 3), {"W3": 1, "W7": 1})


@registry.check("tensor-w7-w3d", "W7 tensor the dual of W3")
def tensor_w7_w3d(wb):
    t = wb.psl_table
    return _decomposition(t, t["W7"] * t["W3d"], {"W6": 1, "W7": 1, "W8": 1})


@registry.check("ext3-w7", "third exterior power of W7")
def ext3_w7(wb):
    t = wb.psl_table
    cube = ext_power(t["W7"], 3)
    return _decomposition(t, cube, {"I": 1, "W6": 2, "W7": 2, "W8": 1},
                          fourth_power_matches=ext_power(t["W7"], 4) == cube,
                          self_dual=cube.conj() == cube)


@registry.check("sym4-u4", "fourth symmetric power of U4")
def sym4_u4(wb):
    t = wb.cover_tables.table
    return _decomposition(t, sym_power(t["U4"], 4), {"I": 1, "W6": 2, "W7": 2, "W8": 1})


@registry.check("no-dim-2-4-5", "irreducible dimensions of the order-168 group")
def no_small_dimensions(wb):
    degrees = wb.psl_table.degrees
    return expect(not {2, 4, 5} & set(degrees), degrees=degrees)


def _split(r) -> tuple[list[str], list[str]]:
    ones = [n for n in r.decomposition if r.table[n].degree == 1]
    threes = [n for n in r.decomposition if r.table[n].degree == 3]
    return ones, threes


@registry.check("f21-restrictions", "U4 and U8 on the order-42 subgroup of the cover")
def f21_restrictions(wb):
    table = wb.cover_tables.table
    handle = wb.cover_subgroup("Z7:Z3")
    u4, u8 = restrict(table["U4"], handle), restrict(table["U8"], handle)
    ones4, threes4 = _split(u4)
    ones8, threes8 = _split(u8)
    norms = {
        "u4_u4": format_cyc(inner(u4.character, u4.character)),
        "u4_u8": format_cyc(inner(u4.character, u8.character)),
        "u8_u8": format_cyc(inner(u8.character, u8.character)),
    }
    ok = (
        u4.degrees() == [1, 3]
        and u8.degrees() == [1, 1, 3, 3]
        and len(ones4) == 1 and len(ones8) == 2
        and len(set(ones4) | set(ones8)) == 3
        and set(threes4) <= set(threes8)
        and _same(inner(u4.character, u4.character), 2)
        and _same(inner(u4.character, u8.character), 1)
        and _same(inner(u8.character, u8.character), 4)
    )
    return expect(ok, subgroup=handle.label, u4=u4.decomposition, u8=u8.decomposition, inner=norms)


@registry.check("sl-subgroups", "U4 on binary subgroups of the cover")
def sl_subgroups(wb):
    u4 = wb.cover_tables.table["U4"]
    found = {}
    for label in ("S3", "D4", "A4"):
        r = restrict(u4, wb.cover_subgroup(label))
        found[r.label] = r
    s3, d4, a4 = found["2.S3"], found["2.D4"], found["2.A4"]
    ones, _ = _split(s3)
    ok = (
        s3.degrees() == [1, 1, 2] and len(ones) == 2
        and d4.degrees() == [2, 2] and _same(inner(d4.character, d4.character), 2)
        and a4.degrees() == [2, 2]
    )
    return expect(ok, decompositions={k: r.decomposition for k, r in found.items()},
                  inner_2d4=format_cyc(inner(d4.character, d4.character)))


@registry.check("sl-subgroup-2s4", "U4 on the binary octahedral subgroup")
def sl_subgroup_2s4(wb):
    r = restrict(wb.cover_tables.table["U4"], wb.cover_subgroup("S4"))
    return reported(subgroup=r.label, decomposition=r.decomposition, degrees=r.degrees(),
                    norm=format_cyc(inner(r.character, r.character)), printed_degrees=[2, 2])


@registry.check("a4-w6-restriction", "W6 on the tetrahedral subgroup")
def a4_w6_restriction(wb):
    r = restrict(wb.psl_table["W6"], wb.subgroup("plane", "A4"))
    return reported(decomposition=r.decomposition, degrees=r.degrees(), printed_degrees=[3, 3])


@registry.check("w3-restriction-irreducible", "W3 on the maximal and tetrahedral subgroups")
def w3_restriction_irreducible(wb):
    w3 = wb.psl_table["W3"]
    degrees = {label: restrict(w3, wb.subgroup("plane", label)).degrees() for label in ("Z7:Z3", "A4", "S4")}
    return expect(all(d == [3] for d in degrees.values()), degrees=degrees)


# Invariants

@registry.check("sl-invariants", "invariance of the forms of degree 4 to 14", slow=True)
def sl_invariants(wb):
    inv = wb.invariants
    result = {name: is_invariant(inv[name], inv.symmetries[name]) for name in InvariantCatalog.SPACE}
    return expect(all(result.values()), **result)


@registry.check("klein-invariance", "both plane quartic models and their Hessians")
def klein_invariance(wb):
    inv = wb.invariants
    names = ("klein", "klein_xy3", "hessian", "hessian_xy3")
    result = {name: is_invariant(inv[name], inv.symmetries[name]) for name in names}
    return expect(all(result.values()), **result)


@registry.check("leading-coefficients", "forms evaluated at the first row of the second generator")
def leading_coefficients(wb):
    g2 = sl_generators(wb.settings.data_dir)[1]
    inv = wb.invariants
    result = {name: leading_coefficient_matches(inv[name], g2) for name in InvariantCatalog.SPACE}
    return expect(all(result.values()), **result)


@registry.check("invariant-dims", "low-degree invariants of the cover, two ways", slow=True)
def invariant_dims(wb):
    cover = wb.groups.cover
    try:
        dims = {d: invariant_dim(cover, d, wb.reynolds) for d in range(1, 9)}
    except PolynomialError as e:
        return expect(False, error=str(e))
    ok = all(dims[d] == 0 for d in (1, 2, 3, 5)) and dims[4] == 1 and all(dims[d] <= 1 for d in range(1, 7))
    return expect(ok, dims={str(d): n for d, n in dims.items()})


@registry.check("invariant-series", "invariant dimensions up to degree 14")
def invariant_series(wb):
    cover = wb.groups.cover
    dims = {d: invariant_dim_by_character(cover, d) for d in range(1, 15)}
    inv = wb.invariants
    basis = monomials(4, 8)
    span = CycMatrix.from_rows([p.coefficient_vector(basis) for p in (inv.phi4 ** 2, inv.phi8, inv.phi8p)]).rank()
    return expect(dims[8] == 3 and span == 3 and dims[14] >= 1 and all(dims[d] == 0 for d in range(1, 15, 2)),
                  dims={str(d): n for d, n in dims.items()}, degree8_span=span)


# Orbits

@registry.check("space-orbits", "small orbits in projective 3-space")
def space_orbits(wb):
    orbits = wb.special_orbits
    sizes = [o.size for o in orbits.census]
    on_quartic = vanishing_profile(orbits.sigma24, {"phi4": wb.invariants.phi4})["phi4"]
    distinct = not any(p in orbits.sigma28p for p in orbits.sigma28.points)
    return expect(sizes == [8, 24, 28, 28] and on_quartic and distinct,
                  sizes=sizes, sigma24_on_phi4=on_quartic, sigma28_distinct=distinct,
                  stabilizers={name: o.stabilizer_label for name, o in orbits.as_dict().items()})


@registry.check("orbit-invariant-profile", "which forms vanish on each small orbit")
def orbit_invariant_profile(wb):
    inv = wb.invariants
    forms = {name: inv[name] for name in InvariantCatalog.SPACE}
    return reported(**{name: vanishing_profile(o, forms) for name, o in wb.special_orbits.as_dict().items()})


@registry.check("klein-small-orbits", "smallest orbit on the plane")
def klein_small_orbits(wb):
    census = min_orbit_size_p2(wb.groups.plane)
    return expect(census.minimum == 21, minimum=census.minimum, sizes=census.sizes)


@registry.check("permutation-orbit-sizes", "transitive actions of small degree")
def permutation_orbit_sizes(wb):
    bound = wb.settings.subgroup_index_bound
    indices = transitive_orbit_sizes(wb.groups.space, bound)
    observed = sorted(indices | {o.size for o in wb.special_orbits.census})
    return expect(set(observed) <= PERMUTATION_SIZES, bound=bound, sizes=observed)


@registry.check("conditions-rank-sigma8", "quadrics through the 8-point orbit")
def conditions_rank_sigma8(wb):
    rank = conditions_rank(wb.special_orbits.sigma8.points, 2)
    return expect(rank == 7, rank=rank, quadrics_through=10 - rank)


@registry.check("conditions-rank-sigma28", "quartics through the 28-point orbits")
def conditions_rank_sigma28(wb):
    orbits = wb.special_orbits
    return reported(sigma28=conditions_rank(orbits.sigma28.points, 4),
                    sigma28p=conditions_rank(orbits.sigma28p.points, 4), quartics=35)


# Riemann-Hurwitz

@registry.check("lemma-sporadic-genera-table", "branch data of genus at most 30")
def sporadic_genera(wb):
    rows = rh_enumerate(30)
    found = [(r.genus,) + r.orbit_counts for r in rows]
    return expect(found == GENERA_TABLE and all(r.quotient_genus == 0 for r in rows),
                  rows=[r.to_dict() for r in rows])


@registry.check("long-orbit-sizes", "orbit sizes on a curve")
def long_orbit_sizes(wb):
    sizes = sorted(curve_orbit_sizes(wb.groups.space))
    return expect(sizes == list(LONG_ORBIT_SIZES), sizes=sizes)


@registry.check("orbit-sums", "totals made of long orbits")
def orbit_sums(wb):
    wide = {m: orbit_sum_witness(m) for m in (60, 90, 120)}
    without24 = {m: orbit_sum_witness(m, LONG_ORBIT_SIZES[1:]) for m in (60, 90, 120)}
    ok = wide[60] is None and wide[90] is not None and wide[120] is not None
    ok = ok and all(w is None for w in without24.values())
    return expect(ok, sizes=list(LONG_ORBIT_SIZES),
                  witnesses={str(m): list(w) if w else None for m, w in wide.items()},
                  without_24={str(m): w is not None for m, w in without24.items()})


@registry.check("castelnuovo", "genus bound for a degree-7 space curve")
def castelnuovo_check(wb):
    return reported(bounds={str(d): castelnuovo(d) for d in range(3, 11)}, degree7=castelnuovo(7), printed=7)


# Groebner

def _finite(wb, names: tuple[str, ...]):
    inv = wb.invariants
    report = ideal_dimension([inv[n] for n in names], wb.settings.primes)
    payload = report.to_dict()
    payload.pop("seconds")
    return expect(report.dimension == 0 and len(report.primes) >= 2, forms=list(names), **payload)


@registry.check("finite-f4-f6-f8p", "common zeros of the degree 4, 6, 8 forms", slow=True)
def finite_4_6_8(wb):
    return _finite(wb, ("phi4", "phi6", "phi8p"))


@registry.check("finite-f4-f6-f14", "common zeros of the degree 4, 6, 14 forms", slow=True)
def finite_4_6_14(wb):
    return _finite(wb, ("phi4", "phi6", "phi14"))


@registry.check("finite-f4-f8p-f14", "common zeros of the degree 4, 8, 14 forms", slow=True)
def finite_4_8_14(wb):
    return _finite(wb, ("phi4", "phi8p", "phi14"))


@registry.check("f4-smooth", "the invariant quartic surface")
def f4_smooth(wb):
    return expect(is_smooth_hypersurface(wb.invariants.phi4, wb.settings.primes), primes=wb.settings.primes)


@registry.check("hessian-smooth", "Hessians of the plane quartics")
def hessian_smooth(wb):
    inv = wb.invariants
    result = {name: is_smooth_hypersurface(inv[name], wb.settings.primes) for name in ("hessian", "hessian_xy3")}
    return expect(all(result.values()), **result)


@registry.check("klein-smooth", "both plane quartic models")
def klein_smooth(wb):
    inv = wb.invariants
    result = {name: is_smooth_hypersurface(inv[name], wb.settings.primes) for name in ("klein", "klein_xy3")}
    return expect(all(result.values()), **result)


# Apolarity

@registry.check("klein-nondegenerate", "catalecticant of the plane quartic")
def klein_nondegenerate(wb):
    inv = wb.invariants
    det = catalecticant(inv.klein).determinant
    det_xy3 = catalecticant(inv.klein_xy3).determinant
    quadratic = _same(det.galois_conjugate(2), det)
    return expect(not det.is_zero() and not det_xy3.is_zero() and quadratic,
                  determinant=format_cyc(det), determinant_xy3=format_cyc(det_xy3), in_quadratic_field=quadratic)


def _inconsistent(wb, lines):
    result = powersum_solve(wb.invariants.klein, lines, wb.settings.working_conductor)
    return expect(not result.solved and result.augmented_rank > result.system_rank, **result.to_dict())


@registry.check("z4-hexagon", "hexagon through the order-4 fixed lines")
def z4_hexagon(wb):
    return _inconsistent(wb, z4_lines())


@registry.check("final-hexagon", "hexagon of the three line pairs")
def final_hexagon(wb):
    return _inconsistent(wb, final_lines())


@registry.check("hexagon-round-trip", "sum of six fourth powers")
def hexagon_round_trip(wb):
    lines = [linear_form(c) for c in ([1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [1, 0, 1], [0, 1, 1])]
    result = powersum_solve(combine(lines, [CycNum.one()] * 6), lines, wb.settings.working_conductor)
    ok = result.solved and result.unique and all(_same(m, 1) for m in result.multipliers)
    return expect(ok, **result.to_dict())


@registry.check("skew-forms", "partials of the quartic in the kernel of the skew forms")
def skew_forms(wb):
    result = skew_form_check(wb.invariants.klein)
    return expect(result.holds, **result.to_dict())


@registry.check("apolar-embedding", "partial derivatives of the quartic")
def apolar_embedding_check(wb):
    inv = wb.invariants
    found = {name: apolar_embedding(inv[name]) for name in ("klein", "klein_xy3")}
    return expect(all(e.injective and e.euler_holds for e in found.values()),
                  ranks={name: e.rank for name, e in found.items()})


# Randomized properties

def _random_cyc(rng: random.Random, n: int) -> CycNum:
    return CycNum.from_vector(n, [rng.randint(-4, 4) for _ in range(n)], rng.randint(1, 3))


@registry.check("cyclotomic-ring-axioms", "exact cyclotomic arithmetic")
def ring_axioms(wb):
    rng = random.Random(wb.settings.seed)
    failures = 0
    for _ in range(wb.settings.random_cases):
        n = rng.choice((1, 3, 4, 7, 8, 12, 28))
        a, b, c = (_random_cyc(rng, n) for _ in range(3))
        k = rng.choice([j for j in range(1, max(n, 2)) if np.gcd(j, n) == 1])
        ok = (
            _same((a + b) * c, a * c + b * c)
            and _same((a * b) * c, a * (b * c))
            and (a + (-a)).is_zero()
            and (a.is_zero() or (a * a.inverse()).is_one())
            and _same((a * b).galois_conjugate(k), a.galois_conjugate(k) * b.galois_conjugate(k))
            and _same((a * b).conj(), a.conj() * b.conj())
        )
        failures += not ok
    return expect(failures == 0, seed=wb.settings.seed, cases=wb.settings.random_cases, failures=failures)


def _random_poly(rng: random.Random, nvars: int, degree: int) -> SparsePoly:
    basis = grevlex_monomials(nvars, degree)
    items = [(m, rng.randint(-3, 3)) for m in rng.sample(basis, min(4, len(basis)))]
    return SparsePoly.from_coefficients(nvars, items)


@registry.check("action-law", "substitution by products of group elements")
def action_law(wb):
    rng = random.Random(wb.settings.seed + 1)
    group = wb.groups.cover
    inv = group.inv
    failures = 0
    for _ in range(wb.settings.random_cases):
        i, j = rng.randrange(group.order), rng.randrange(group.order)
        m, n = group.elements[i], group.elements[j]
        f = _random_poly(rng, 4, rng.randint(1, 3))
        ok = act(m @ n, f) == act(m, act(n, f)) and act(m, act(group.elements[int(inv[i])], f)) == f
        failures += not ok
    return expect(failures == 0, seed=wb.settings.seed, cases=wb.settings.random_cases, failures=failures)


@registry.check("class-equation", "class sizes and centralizers")
def class_equation(wb):
    rng = random.Random(wb.settings.seed + 2)
    groups = (wb.groups.cover, wb.groups.space, wb.groups.plane)
    sums = {g.label: sum(c.size for c in g.classes) == g.order for g in groups}
    failures = 0
    for _ in range(wb.settings.random_cases):
        group = rng.choice(groups)
        x = rng.randrange(group.order)
        centralizer = int(np.count_nonzero(group.mul[:, x] == group.mul[x, :]))
        size = group.classes[int(group.class_of[x])].size
        failures += size * centralizer != group.order
    return expect(all(sums.values()) and failures == 0, sums=sums,
                  seed=wb.settings.seed, cases=wb.settings.random_cases, failures=failures)


@registry.check("groebner-shuffle", "reduced bases do not depend on generator order")
def groebner_shuffle(wb):
    rng = random.Random(wb.settings.seed + 3)
    p = wb.settings.primes[0]
    failures = 0
    for _ in range(wb.settings.random_cases):
        nvars = rng.randint(2, 3)
        gens = []
        for _ in range(rng.randint(2, 3)):
            basis = grevlex_monomials(nvars, rng.randint(1, 2))
            terms = {m: rng.randrange(p) for m in rng.sample(basis, min(3, len(basis)))}
            gens.append(PrimeFieldPoly.from_terms(p, nvars, terms))
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            continue
        basis = buchberger(gens)
        shuffled = list(gens)
        rng.shuffle(shuffled)
        scaled = [PrimeFieldPoly(p, nvars, g.element * rng.randrange(1, p)) for g in shuffled]
        failures += not (buchberger(scaled) == basis and is_groebner(basis))
    return expect(failures == 0, prime=p, seed=wb.settings.seed, cases=wb.settings.random_cases, failures=failures)
