import pytest

from src.apolarity.catalecticant import QUARTICS, apolar_embedding, catalecticant, is_degenerate
from src.apolarity.hexagon import combine, final_lines, hexagon_system, powersum_solve, z4_lines
from src.apolarity.skew import skew_form_check, verify_spusk
from src.cyclotomic.field import CycNum
from src.errors import DegenerateQuarticError, PolynomialError, ProportionalLinesError
from src.invariants.poly import SparsePoly, linear_form

GENERAL_LINES = ([1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [1, 0, 1], [0, 1, 1])


def random_quartic(rng) -> SparsePoly:
    while True:
        f = SparsePoly.from_coefficients(3, [(m, rng.randint(-3, 3)) for m in QUARTICS])
        if not f.is_zero() and f.degree == 4 and not is_degenerate(f):
            return f


def test_fourth_power_has_rank_one():
    l = linear_form([1, 2, 3])
    assert catalecticant(l ** 4).rank == 1
    assert catalecticant(SparsePoly.zero(3)).rank == 0


def test_fermat_quartic_is_degenerate():
    x, y, z = SparsePoly.variables(3)
    cat = catalecticant(x ** 4 + y ** 4 + z ** 4)
    assert cat.rank == 3
    assert cat.is_degenerate()


def test_klein_quartic_is_not_degenerate(catalog):
    cat = catalecticant(catalog.klein)
    assert cat.rank == 6
    assert not cat.determinant.is_zero()
    assert not is_degenerate(catalog.klein_xy3)


def test_catalecticant_needs_a_quartic():
    x = SparsePoly.variable(0, 3)
    with pytest.raises(PolynomialError):
        catalecticant(x ** 3)
    with pytest.raises(PolynomialError):
        catalecticant(SparsePoly.variable(0, 4) ** 4)


def test_apolar_embedding(catalog):
    embedding = apolar_embedding(catalog.klein)
    assert embedding.injective
    assert embedding.euler_holds
    assert embedding.matrix.cols == 10


def test_round_trip():
    lines = [linear_form(c) for c in GENERAL_LINES]
    mu = [CycNum.from_int(k) for k in (1, 2, -1, 3, 1, 5)]
    result = powersum_solve(combine(lines, mu), lines)
    assert result.solved and result.unique
    assert all((a - b).is_zero() for a, b in zip(result.multipliers, mu))


@pytest.mark.parametrize("case", [z4_lines, final_lines])
def test_klein_hexagons_are_inconsistent(catalog, case):
    result = powersum_solve(catalog.klein, case())
    assert not result.solved
    assert result.augmented_rank == result.system_rank + 1
    assert "multipliers" not in result.to_dict()


def test_bad_lines(catalog):
    x, y, z = SparsePoly.variables(3)
    with pytest.raises(ProportionalLinesError):
        powersum_solve(catalog.klein_xy3, [x, y, z, x + y, x.scale(2), y + z])
    with pytest.raises(PolynomialError):
        powersum_solve(catalog.klein_xy3, [x, y, z, x + y, x * y, y + z])


def test_skew_forms_kill_the_partials(catalog):
    result = skew_form_check(catalog.klein)
    assert result.holds
    assert result.to_dict()["failures"] == 0
    assert verify_spusk(catalog.klein_xy3)


def test_skew_forms_on_random_quartics(rng):
    for _ in range(2):
        assert verify_spusk(random_quartic(rng))


def test_skew_forms_need_a_nondegenerate_quartic():
    x = SparsePoly.variable(0, 3)
    with pytest.raises(DegenerateQuarticError):
        verify_spusk(x ** 4)


def test_solving_in_a_larger_field():
    lines = [linear_form(c) for c in GENERAL_LINES]
    mu = [CycNum.from_int(k) for k in (2, 1, 1, -1, 4, 3)]
    f = combine(lines, mu)
    assert hexagon_system(f, lines).conductor == 1
    assert hexagon_system(f, lines, 28).conductor == 28
    result = powersum_solve(f, lines, 28)
    assert result.solved and result.unique
    assert all((a - b).is_zero() for a, b in zip(result.multipliers, mu))
