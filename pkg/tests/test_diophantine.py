import pytest

from src.diophantine.solvers import (
    LONG_ORBIT_SIZES,
    castelnuovo,
    curve_orbit_sizes,
    orbit_sum_witness,
    representable_as_orbit_sum,
    rh_enumerate,
)
from src.errors import ArgumentError

GENERA = [
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


def test_genera_up_to_30():
    rows = rh_enumerate(30)
    assert [(r.genus,) + r.orbit_counts for r in rows] == GENERA
    assert all(r.quotient_genus == 0 and r.satisfies_identity() for r in rows)


def test_klein_quartic_is_the_first_row():
    first = rh_enumerate(3)
    assert len(first) == 1
    assert first[0].to_dict() == {"g": 3, "quotient_genus": 0, "24": 1, "42": 0, "56": 1, "84": 1}


def test_larger_search_bounds_add_nothing():
    assert rh_enumerate(30, slack=3) == rh_enumerate(30)


def test_rh_arguments():
    with pytest.raises(ArgumentError):
        rh_enumerate(1)
    with pytest.raises(ArgumentError):
        rh_enumerate(10, slack=0)


def test_curve_orbit_sizes(groups):
    assert sorted(curve_orbit_sizes(groups.space)) == list(LONG_ORBIT_SIZES)


@pytest.mark.parametrize("m, representable", [(0, True), (24, True), (60, False), (90, True), (120, True), (1, False)])
def test_orbit_sums(m, representable):
    witness = orbit_sum_witness(m)
    assert (witness is not None) == representable
    if witness is not None:
        assert sum(n * s for n, s in zip(witness, LONG_ORBIT_SIZES)) == m


def test_orbit_sums_without_the_shortest_orbit():
    sizes = LONG_ORBIT_SIZES[1:]
    assert not any(representable_as_orbit_sum(m, sizes) for m in (60, 90, 120))
    assert representable_as_orbit_sum(84, sizes)


def test_orbit_sum_arguments():
    with pytest.raises(ArgumentError):
        orbit_sum_witness(-1)
    with pytest.raises(ArgumentError):
        orbit_sum_witness(10, [0, 5])


def test_castelnuovo():
    assert [castelnuovo(d) for d in range(3, 9)] == [0, 1, 2, 4, 6, 9]
    with pytest.raises(ArgumentError):
        castelnuovo(2)
