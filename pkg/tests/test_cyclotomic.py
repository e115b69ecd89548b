from fractions import Fraction

import pytest

from src.cyclotomic.field import CycNum, lift_common
from src.cyclotomic.text import format_cyc, parse_cyc
from src.errors import ConductorError, TextFormatError

EPSILON = CycNum.from_vector(7, [0, 1, 1, 0, 1])


def random_cyc(rng, n):
    return CycNum.from_vector(n, [rng.randint(-5, 5) for _ in range(n)], rng.randint(1, 4))


def test_roots_of_unity():
    z = CycNum.zeta(7)
    assert (z ** 7).is_one()
    assert sum((z ** k for k in range(7)), CycNum.zero(7)).is_zero()
    assert (CycNum.zeta(4) ** 2 + 1).is_zero()


def test_epsilon_is_quadratic():
    assert (EPSILON * EPSILON + EPSILON + 2).is_zero()
    sqrt_minus_7 = EPSILON * 2 + 1
    assert (sqrt_minus_7 * sqrt_minus_7 + 7).is_zero()
    assert (EPSILON + EPSILON.conj() + 1).is_zero()


def test_rational_values():
    a = CycNum.from_fraction(Fraction(3, 4), 7)
    assert a.is_rational()
    assert a.to_fraction() == Fraction(3, 4)
    assert not EPSILON.is_rational()
    with pytest.raises(ValueError):
        EPSILON.to_fraction()


def test_embedding_keeps_value():
    i = CycNum.zeta(4)
    lifted = i.embed(28)
    assert lifted.conductor == 28
    assert (lifted * lifted + 1).is_zero()
    assert (EPSILON.embed(28) - EPSILON).is_zero()


def test_incompatible_conductors():
    with pytest.raises(ConductorError):
        CycNum.zeta(4) + CycNum.zeta(7)
    a, b = lift_common([CycNum.zeta(4), CycNum.zeta(7)])
    assert a.conductor == b.conductor == 28
    with pytest.raises(ConductorError):
        CycNum.zeta(7).embed(12)


def test_inverse_and_division():
    x = EPSILON + 3
    assert (x * x.inverse()).is_one()
    assert ((EPSILON / x) * x - EPSILON).is_zero()
    with pytest.raises(ZeroDivisionError):
        CycNum.zero(7).inverse()
    with pytest.raises(ZeroDivisionError):
        EPSILON / 0


def test_inverse_of_roots_and_mixed_elements():
    z = CycNum.from_vector(7, [0, 1, 0, 0, 0, 0, 0], 1)
    assert (z * z.inverse()).is_one()
    assert (z.inverse() - z ** 6).is_zero()
    w = CycNum.zeta(4).embed(28) + CycNum.zeta(7).embed(28) * 3 - CycNum.from_fraction(Fraction(1, 2), 28)
    assert w.conductor == 28
    assert (w * w.inverse()).is_one()
    assert (w.inverse().inverse() - w).is_zero()


def test_galois_conjugates():
    assert (EPSILON.galois_conjugate(2) - EPSILON).is_zero()
    assert (EPSILON.galois_conjugate(3) - EPSILON.conj()).is_zero()
    with pytest.raises(ConductorError):
        CycNum.zeta(28).galois_conjugate(7)


def test_text_format():
    assert format_cyc(CycNum.from_int(3)) == "cyc(1; 3)"
    assert parse_cyc("cyc(7; z + z^2 + z^4)") == EPSILON
    assert (parse_cyc("1/2 - z", 4) - (CycNum.from_fraction(Fraction(1, 2), 4) - CycNum.zeta(4))).is_zero()
    assert parse_cyc(format_cyc(EPSILON / 3)) == EPSILON / 3
    with pytest.raises(TextFormatError):
        parse_cyc("z + 1")
    with pytest.raises(TextFormatError):
        parse_cyc("cyc(7; z +)")


def test_approximation():
    assert abs(CycNum.zeta(4).approx_complex() - 1j) < 1e-12
    assert abs((EPSILON * 2 + 1).approx_complex() - 7 ** 0.5 * 1j) < 1e-12


@pytest.mark.parametrize("n", [1, 3, 4, 7, 12, 28])
def test_ring_axioms(rng, n):
    for _ in range(50):
        a, b, c = (random_cyc(rng, n) for _ in range(3))
        assert ((a + b) * c - (a * c + b * c)).is_zero()
        assert ((a * b) * c - a * (b * c)).is_zero()
        assert (a * b - b * a).is_zero()
        assert (a + (-a)).is_zero()
        if a:
            assert (a * a.inverse()).is_one()
        assert ((a * b).conj() - a.conj() * b.conj()).is_zero()
