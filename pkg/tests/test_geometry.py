import pytest

from src.cyclotomic.field import CycNum
from src.errors import GeometryError, TextFormatError
from src.geometry.orbits import conditions_rank, fixed_points, min_orbit_size_p2, orbit, vanishing_profile
from src.geometry.points import ProjPoint, dumps_points, load_points, parse_point
from src.groups.subgroups import subgroups_of_order
from src.linalg.matrix import CycMatrix


def test_points_are_normalized():
    assert ProjPoint.from_coords([2, 4, 0]) == ProjPoint.from_coords([1, 2, 0])
    p = ProjPoint.from_coords([0, CycNum.zeta(7), 1])
    assert p.coords[1].is_one()
    assert p.dimension == 2
    with pytest.raises(GeometryError):
        ProjPoint.from_coords([0, 0, 0])


def test_point_text():
    p = parse_point("cyc(7; 1), cyc(7; z), 0, 0")
    assert p.conductor == 7
    assert (p.coords[1] - CycNum.zeta(7)).is_zero()
    assert load_points("# a comment\n1, 2, 3\n\n0, 1, 1\n") == [
        ProjPoint.from_coords([1, 2, 3]),
        ProjPoint.from_coords([0, 1, 1]),
    ]
    with pytest.raises(TextFormatError):
        parse_point("cyc(7; 1)")


def test_special_orbits(workbench):
    orbits = workbench.special_orbits
    assert [o.size for o in orbits.census] == [8, 24, 28, 28]
    assert orbits.sigma8.stabilizer_label == "Z7:Z3"
    assert orbits.sigma24.stabilizer_order == 7
    assert orbits.sigma28.stabilizer_label == "S3"
    assert not any(p in orbits.sigma28p for p in orbits.sigma28.points)


def test_orbit_points_survive_text(workbench):
    points = workbench.special_orbits.sigma8.points
    assert load_points(dumps_points(points)) == points


def test_sigma24_lies_on_the_quartic(workbench, catalog):
    profile = vanishing_profile(workbench.special_orbits.sigma24, {"phi4": catalog.phi4})
    assert profile == {"phi4": True}


def test_orbit_of_a_special_point(groups, workbench):
    p = workbench.special_orbits.sigma8.points[3]
    record = orbit(groups.space, p)
    assert record.size == 8
    assert record.points == workbench.special_orbits.sigma8.points


def test_conditions_rank(workbench):
    assert conditions_rank(workbench.special_orbits.sigma8.points, 2) == 7
    line = [ProjPoint.from_coords(c) for c in ([1, 0, 0], [0, 1, 0], [1, 1, 0])]
    assert conditions_rank(line, 1) == 2
    assert conditions_rank(line, 2) == 3
    assert conditions_rank([], 3) == 0


def test_smallest_plane_orbit(groups):
    census = min_orbit_size_p2(groups.plane)
    assert census.minimum == 21
    assert min(census.sizes) == 21


def test_fixed_points_of_an_order_seven_diagonal():
    z = CycNum.zeta(7)
    locus = fixed_points(CycMatrix.diag([CycNum.one(7), z, z * z]))
    assert len(locus.components) == 3
    assert set(locus.points) == {
        ProjPoint.from_coords([1, 0, 0]),
        ProjPoint.from_coords([0, 1, 0]),
        ProjPoint.from_coords([0, 0, 1]),
    }
    assert not locus.positive


def test_f21_has_no_fixed_point_in_the_plane(groups):
    assert fixed_points(subgroups_of_order(groups.plane, 21)[0]).components == []
