import pytest

from src.cyclotomic.field import CycNum
from src.errors import BadPrimeError, PolynomialError
from src.groebner.buchberger import buchberger, is_groebner
from src.groebner.dimension import (
    hilbert_dimension,
    ideal_dimension,
    independent_set_dimension,
    is_smooth_hypersurface,
    minimalize,
    projective_dimension,
)
from src.groebner.modular import PrimeFieldPoly, primes_for, reduce_mod_p, reduce_number, zeta_image
from src.invariants.poly import SparsePoly

P = 31991
PRIMES = [31991, 65521]


def poly(nvars, terms, p=P):
    return PrimeFieldPoly.from_terms(p, nvars, terms)


def test_reduce_phi4(catalog):
    image = reduce_mod_p(catalog.phi4, P)
    assert len(image) == 5
    assert image.terms[(4, 0, 0, 0)] == 2
    assert image.terms[(1, 1, 1, 1)] == 6


def test_reduce_klein_quartic(catalog):
    image = reduce_mod_p(catalog.klein, P)
    assert image.degree == 4
    assert len(image) == len(catalog.klein)


def test_roots_of_unity_mod_p():
    z = zeta_image(P, 7)
    assert pow(z, 7, P) == 1 and z != 1
    assert pow(zeta_image(P, 7, 3), 7, P) == 1
    with pytest.raises(BadPrimeError):
        zeta_image(P, 4)
    with pytest.raises(BadPrimeError):
        zeta_image(P, 7, 7)


def test_bad_reductions():
    with pytest.raises(BadPrimeError):
        reduce_number(CycNum.from_int(1) / P, P, 1)
    x = SparsePoly.variable(0, 2)
    with pytest.raises(BadPrimeError):
        reduce_mod_p(x * x * P, P)


def test_primes_for_conductor():
    usable = primes_for(28, PRIMES)
    assert len(usable) == 2
    assert 65521 in usable
    assert all((p - 1) % 28 == 0 for p in usable)


def test_buchberger_small_ideals():
    x, y = (1, 0), (0, 1)
    basis = buchberger([poly(2, {x: 1}), poly(2, {x: 1, (0, 0): -1})])
    assert basis.is_unit()
    twisted = buchberger([poly(2, {(2, 0): 1, y: -1}), poly(2, {(1, 1): 1, (0, 0): -1})])
    assert is_groebner(twisted)
    assert twisted.contains(poly(2, {(0, 2): 1, (1, 0): -1}))
    assert not twisted.contains(poly(2, {x: 1}))


def test_reduced_basis_is_canonical(rng):
    gens = [
        poly(3, {(2, 0, 0): 3, (0, 1, 1): 5}),
        poly(3, {(1, 1, 0): 1, (0, 0, 2): 7}),
        poly(3, {(0, 2, 0): 2, (1, 0, 1): 11}),
    ]
    basis = buchberger(gens)
    for _ in range(5):
        shuffled = list(gens)
        rng.shuffle(shuffled)
        scaled = [PrimeFieldPoly(P, 3, g.element * rng.randrange(1, P)) for g in shuffled]
        assert buchberger(scaled) == basis


def test_monomial_ideal_dimension():
    assert minimalize([(2, 0), (1, 0), (1, 1)]) == ((1, 0),)
    assert independent_set_dimension([(1, 1, 0)], 3) == 2
    assert hilbert_dimension([(1, 1, 0)], 3) == 2
    assert independent_set_dimension([(1, 0, 0), (0, 1, 0), (0, 0, 1)], 3) == 0
    assert hilbert_dimension([(0, 0, 0)], 3) == -1


def test_ideal_dimension():
    x1, x2, x3, x4 = SparsePoly.variables(4)
    assert ideal_dimension([x1], PRIMES).dimension == 2
    assert ideal_dimension([x1, x2], PRIMES).dimension == 1
    assert ideal_dimension([x1, x2, x3, x4], PRIMES).dimension == -1
    with pytest.raises(PolynomialError):
        ideal_dimension([x1 + 1], PRIMES)
    with pytest.raises(PolynomialError):
        ideal_dimension([], PRIMES)


def test_smoothness(catalog):
    x, y, z = SparsePoly.variables(3)
    assert is_smooth_hypersurface(x ** 2 + y ** 2 + z ** 2, PRIMES)
    assert not is_smooth_hypersurface(x * y, PRIMES)
    assert is_smooth_hypersurface(catalog.phi4, PRIMES)
    assert is_smooth_hypersurface(catalog.klein, PRIMES)
    with pytest.raises(PolynomialError):
        is_smooth_hypersurface(x + 1, PRIMES)


@pytest.mark.slow
@pytest.mark.parametrize("names", [("phi4", "phi6", "phi8p"), ("phi4", "phi6", "phi14"), ("phi4", "phi8p", "phi14")])
def test_finite_common_zeros(catalog, names):
    report = ideal_dimension([catalog[n] for n in names], PRIMES)
    assert report.dimension == 0
    assert len(report.per_prime) == 2


def test_projective_dimension_of_a_plane_conic():
    x1, x2, x3, x4 = SparsePoly.variables(4)
    assert projective_dimension([x4, x1 * x2 - x3 * x3], PRIMES) == 1
