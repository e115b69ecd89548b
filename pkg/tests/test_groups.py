import numpy as np
import pytest

from src.cyclotomic.field import CycNum
from src.errors import ArgumentError, GroupTooLargeError, IsomorphismNotFoundError, NotASubgroupError
from src.groups.classes import class_sizes
from src.groups.group import generate, lift, projectivize
from src.groups.isomorphism import classify, find_isomorphism
from src.groups.subgroups import (
    cyclic_orbit_sizes,
    preimage_in_cover,
    subgroup,
    subgroups_of_order,
    transitive_orbit_sizes,
    whole_group,
)
from src.linalg.matrix import CycMatrix


@pytest.fixture(scope="module")
def quaternions():
    i = CycNum.zeta(4)
    return generate([
        CycMatrix.diag([i, -i]),
        CycMatrix.from_rows([[0, 1], [-1, 0]], 4),
    ], label="Q8")


def test_quaternion_group(quaternions):
    assert quaternions.order == 8
    assert quaternions.order_histogram() == {1: 1, 2: 1, 4: 6}
    assert len(quaternions.center) == 2
    assert classify(quaternions) == "2.(Z2xZ2)"
    quotient = projectivize(quaternions)
    assert quotient.order == 4
    assert classify(quotient) == "Z2xZ2"


def test_generation_cap(quaternions):
    gens = [quaternions.elements[g] for g in quaternions.generators]
    with pytest.raises(GroupTooLargeError):
        generate(gens, cap=5)


def test_standard_orders(groups):
    assert groups.cover.order == 336
    assert groups.space.order == 168
    assert groups.plane.order == 168
    assert groups.cover.dimension == 4
    assert groups.plane.dimension == 3


def test_element_orders(groups):
    expected = {1: 1, 2: 21, 3: 56, 4: 42, 7: 48}
    assert groups.space.order_histogram() == expected
    assert groups.plane.order_histogram() == expected
    assert classify(groups.space) == "PSL2(F7)"
    assert classify(groups.cover) == "SL2(F7)"


def test_class_sizes(groups):
    assert sorted(class_sizes(groups.space)) == [1, 21, 24, 24, 42, 56]
    assert sorted(class_sizes(groups.cover)) == [1, 1, 24, 24, 24, 24, 42, 42, 42, 56, 56]
    names = [c.name for c in groups.plane.classes]
    assert names == ["1a", "2a", "3a", "4a", "7a", "7b"]


def test_mul_table_is_a_group_law(groups):
    g = groups.plane
    mul = g.mul
    assert np.array_equal(mul[0], np.arange(g.order))
    assert np.array_equal(mul[mul[:, 5], 9], mul[:, mul[5, 9]])
    assert np.all(mul[np.arange(g.order), g.inv] == 0)


def test_words_rebuild_elements(groups):
    g = groups.plane
    for i in (1, 17, 100, 167):
        product = CycMatrix.identity(3, g.conductor)
        for s in g.word(i):
            product = product @ g.elements[g.generators[s]]
        assert g.element_id(product) == i


def test_maximal_subgroups(groups):
    f21 = subgroups_of_order(groups.space, 21)
    assert len(f21) == 1
    assert f21[0].label == "Z7:Z3"
    assert f21[0].class_size == 8
    octahedral = subgroups_of_order(groups.space, 24)
    assert len(octahedral) == 2
    assert all(h.label == "S4" and h.class_size == 7 for h in octahedral)
    with pytest.raises(ArgumentError):
        subgroups_of_order(groups.space, 5)


def test_subgroup_handles(groups):
    whole = whole_group(groups.space)
    assert whole.index == 1
    cyclic = subgroup(groups.space, [groups.space.generators[0]])
    assert cyclic.order == int(groups.space.element_orders[groups.space.generators[0]])
    assert 0 in cyclic


def test_cyclic_orbit_sizes(groups):
    assert cyclic_orbit_sizes(groups.space) == {168, 84, 56, 42, 24}


def test_preimages(groups):
    space = groups.space
    octahedral = subgroups_of_order(space, 24)[0]
    pre = preimage_in_cover(space, octahedral)
    assert pre.full.order == 48
    assert pre.full.label == "2.S4"
    assert pre.smallest.order == 48
    f21 = subgroups_of_order(space, 21)[0]
    pre = preimage_in_cover(space, f21)
    assert pre.full.order == 42
    assert pre.smallest.order == 21
    with pytest.raises(NotASubgroupError):
        preimage_in_cover(groups.plane, subgroups_of_order(groups.plane, 21)[0])


def test_lift(groups):
    space = groups.space
    for q in (1, 50, 120):
        c = lift(space, q)
        assert int(space.cover_map[c]) == q


def test_plane_and_space_are_isomorphic(groups):
    plane, space = groups.plane, groups.space
    phi = find_isomorphism(plane, space)
    assert len(np.unique(phi)) == 168
    assert np.array_equal(phi[plane.mul], space.mul[np.ix_(phi, phi)])
    with pytest.raises(IsomorphismNotFoundError):
        find_isomorphism(groups.cover, space)


def test_transitive_orbit_sizes(groups):
    assert transitive_orbit_sizes(groups.plane, 41) == {1, 7, 8, 14, 21, 24, 28}
