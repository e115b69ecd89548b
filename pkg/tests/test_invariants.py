from fractions import Fraction

import pytest

from src.cyclotomic.field import CycNum
from src.errors import DataFileError, PolynomialError, TextFormatError
from src.groups.standard import plane_generators, sl_generators, xy3_generators
from src.invariants.action import (
    ReynoldsOperator,
    act,
    hessian,
    invariant_basis,
    invariant_dim,
    invariant_dim_by_character,
    is_invariant,
)
from src.invariants.klein import InvariantCatalog, dumps_catalog, leading_coefficient_matches, loads_catalog
from src.invariants.poly import SparsePoly, format_poly, grevlex_monomials, monomials, parse_poly
from src.linalg.matrix import CycMatrix


def test_polynomial_arithmetic():
    x, y = SparsePoly.variables(2)
    square = (x + y) ** 2
    assert square == x ** 2 + 2 * x * y + y ** 2
    assert (square - square).is_zero()
    assert square.degree == 2 and square.is_homogeneous()
    assert not (square + 1).is_homogeneous()
    assert square.diff(0) == 2 * x + 2 * y
    assert square.evaluate([1, 2]).to_fraction() == 9
    assert (x * Fraction(1, 2)).coefficient((1, 0)).to_fraction() == Fraction(1, 2)
    assert square.is_proportional(square.scale(CycNum.zeta(7)))
    with pytest.raises(PolynomialError):
        x ** -1


def test_monomial_orders():
    assert len(monomials(4, 4)) == 35
    assert len(monomials(3, 6)) == 28
    names = [format_poly(SparsePoly.monomial(m)) for m in grevlex_monomials(3, 2)]
    assert names == ["x^2", "x*y", "y^2", "x*z", "y*z", "z^2"]


def test_polynomial_text(catalog):
    assert format_poly(catalog.phi4) == "2*x1^4 + 6*x1*x2*x3*x4 + x2^3*x3 + x2*x4^3 + x3^3*x4"
    assert parse_poly(format_poly(catalog.klein), 3) == catalog.klein
    assert parse_poly("x*y^3 + y*z^3 + z*x^3", 3) == catalog.klein_xy3
    assert parse_poly("cyc(4; z)*a - b", 2, ["a", "b"]).coefficient((1, 0)) == CycNum.zeta(4)
    for text in ("", "x +", "x**"):
        with pytest.raises(TextFormatError):
            parse_poly(text, 3)


def test_row_substitution():
    x, y = SparsePoly.variables(2)
    m = CycMatrix.from_rows([[1, 2], [0, 1]])
    assert act(m, x) == x
    assert act(m, y) == 2 * x + y
    with pytest.raises(PolynomialError):
        act(CycMatrix.identity(3), x)


def test_action_law(groups, rng):
    cover = groups.cover
    x1, x2, x3, x4 = SparsePoly.variables(4)
    f = x1 ** 2 * x3 + 3 * x2 * x4 ** 2 - x4 ** 3
    for _ in range(10):
        m = cover.elements[rng.randrange(cover.order)]
        n = cover.elements[rng.randrange(cover.order)]
        assert act(m @ n, f) == act(m, act(n, f))


def test_catalog_degrees(catalog):
    for name, degree in InvariantCatalog.DEGREES.items():
        assert catalog[name].degree == degree
        assert catalog[name].is_homogeneous()
    assert catalog.phi4.is_rational()
    assert not catalog.klein.is_rational()
    with pytest.raises(PolynomialError):
        catalog["phi5"]


def test_low_degree_invariance(catalog):
    space = list(sl_generators())
    assert is_invariant(catalog.phi4, space)
    assert is_invariant(catalog.phi6, space)
    assert is_invariant(catalog.klein, list(plane_generators()))
    assert is_invariant(catalog.klein_xy3, list(xy3_generators()))
    x1 = SparsePoly.variable(0, 4)
    assert not is_invariant(x1 ** 4, space)


@pytest.mark.slow
def test_high_degree_invariance(catalog):
    space = list(sl_generators())
    for name in ("phi8", "phi8p", "phi14"):
        assert is_invariant(catalog[name], space)


def test_leading_coefficients(catalog):
    g2 = sl_generators()[1]
    for name in InvariantCatalog.SPACE:
        assert leading_coefficient_matches(catalog[name], g2)


def test_dimensions_by_character(groups):
    dims = {d: invariant_dim_by_character(groups.cover, d) for d in range(1, 9)}
    assert dims == {1: 0, 2: 0, 3: 0, 4: 1, 5: 0, 6: 1, 7: 0, 8: 3}


@pytest.mark.slow
def test_reynolds(workbench, catalog):
    operator = workbench.reynolds
    assert operator(catalog.phi4) == catalog.phi4
    basis = invariant_basis(workbench.groups.cover, 4, operator)
    assert len(basis) == 1
    assert basis[0].is_proportional(catalog.phi4)


def test_reynolds_needs_linear_group(groups):
    with pytest.raises(PolynomialError):
        ReynoldsOperator(groups.space)


def test_hessian(catalog):
    x, y, z = SparsePoly.variables(3)
    assert hessian(x ** 2 + y ** 2 + z ** 2) == SparsePoly.constant(3, 8)
    assert catalog.hessian_xy3.degree == 6
    with pytest.raises(PolynomialError):
        hessian(x ** 2 + y)


def test_catalog_text(catalog):
    loaded = loads_catalog(dumps_catalog(catalog))
    assert loaded == catalog.entries()
    with pytest.raises(DataFileError):
        loads_catalog("psi = x1\n")


@pytest.mark.slow
def test_invariant_dim_agrees_both_ways(workbench):
    assert invariant_dim(workbench.groups.cover, 4, workbench.reynolds) == 1
    with pytest.raises(PolynomialError):
        invariant_dim(workbench.groups.cover, 0)


def _group_average(group, f: SparsePoly) -> SparsePoly:
    total = SparsePoly.zero(f.nvars)
    for g in group.elements:
        total = total + act(g, f)
    return total.scale(Fraction(1, group.order))


@pytest.mark.parametrize("exp", [(4, 0, 0), (2, 1, 1), (1, 3, 0), (0, 1, 3)])
def test_reynolds_matches_the_full_average(groups, exp):
    plane = groups.plane
    f = SparsePoly.monomial(exp)
    image = ReynoldsOperator(plane)(f)
    assert (image - _group_average(plane, f)).is_zero()
    assert is_invariant(image, [plane.elements[g] for g in plane.generators])


def test_plane_invariant_dimensions_agree(groups):
    operator = ReynoldsOperator(groups.plane)
    for d in (2, 3, 4):
        assert invariant_dim(groups.plane, d, operator) == (1 if d == 4 else 0)


def test_degree_eight_invariants(catalog):
    basis = monomials(4, 8)
    rows = [p.coefficient_vector(basis) for p in (catalog.phi4 ** 2, catalog.phi8, catalog.phi8p)]
    assert CycMatrix.from_rows(rows).rank() == 3
