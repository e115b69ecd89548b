import pytest

from src.characters.catalog import catalog_entries, catalog_entry, catalog_table
from src.characters.classfunc import ClassFunction, character_of, ext_power, inner, multiplicity, sym_power
from src.characters.expr import parse_character
from src.characters.restrict import restrict
from src.characters.table import EPSILON, PSL_LABELS
from src.errors import CharacterError, TextFormatError
from src.linalg.matrix import CycMatrix


def test_psl_table_shape(psl_table):
    assert psl_table.labels == PSL_LABELS
    assert psl_table.degrees == [1, 3, 3, 6, 7, 8]
    assert sorted(psl_table.class_labels) == ["(1)", "(2)", "(3)", "(4)", "(7')", "(7)"]
    assert psl_table.is_complete()
    psl_table.verify()


def test_w3_values(psl_table):
    w3 = psl_table["W3"]
    at = dict(zip(psl_table.class_labels, w3.values))
    assert (at["(7)"] - EPSILON).is_zero()
    assert (at["(7')"] - EPSILON.conj()).is_zero()
    assert (at["(2)"] + 1).is_zero()
    assert at["(3)"].is_zero()
    assert not w3.is_real()
    assert psl_table["W7"].is_real()


def test_table_lookup(psl_table):
    with pytest.raises(CharacterError):
        psl_table["W5"]


def test_newton_powers(psl_table):
    w3 = psl_table["W3"]
    assert sym_power(w3, 0) == psl_table["I"]
    assert sym_power(w3, 1) == w3
    assert ext_power(w3, 3) == psl_table["I"]
    assert all(v.is_zero() for v in ext_power(w3, 4).values)
    with pytest.raises(CharacterError):
        sym_power(w3, -1)


def test_multiplicity_must_be_integral(psl_table):
    w3 = psl_table["W3"]
    assert multiplicity(w3 * w3, psl_table["W6"]) == 1
    half = ClassFunction(w3.group, tuple(v / 2 for v in w3.values))
    with pytest.raises(CharacterError):
        multiplicity(half, w3)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("sym(W3,2)", {"W6": 1}),
        ("ext(W3d,2)", {"W3": 1}),
        ("sym(W3d,3)", {"W3": 1, "W7": 1}),
        ("tensor(W7,W3d)", {"W6": 1, "W7": 1, "W8": 1}),
        ("ext(W7,3)", {"I": 1, "W6": 2, "W7": 2, "W8": 1}),
        ("sym(U4,4)", {"I": 1, "W6": 2, "W7": 2, "W8": 1}),
        ("conj(W3) + I", {"I": 1, "W3d": 1}),
        ("ext(U4,2)", {"W6": 1}),
    ],
)
def test_decompositions(cover_tables, text, expected):
    table = cover_tables.table
    assert table.decompose(parse_character(text, table)) == expected


def test_expression_errors(psl_table):
    for text in ("sym(W3)", "W3 W6", "root(W3)", "W3 - W6", "ext(W3,"):
        with pytest.raises(TextFormatError):
            parse_character(text, psl_table)
    with pytest.raises(CharacterError):
        parse_character("W9", psl_table)


def test_cover_rows(cover_tables):
    table = cover_tables.table
    assert table.labels == PSL_LABELS + ["U4", "U8"]
    assert table.is_complete() is False
    assert inner(table["U4"], table["U4"]).is_one()
    assert inner(table["U8"], table["U8"]).is_one()
    assert inner(table["U4"], table["U8"]).is_zero()
    assert cover_tables.u4_alpha_bar_class in ("(7)", "(7')")


@pytest.mark.parametrize("label", sorted(catalog_entries()))
def test_catalog_tables_are_complete(label):
    table = catalog_table(label)
    assert table.is_complete()
    assert table.group.order == sum(d * d for d in table.degrees)


def test_cyclic_catalog():
    assert catalog_table("Z7").degrees == [1] * 7
    with pytest.raises(CharacterError):
        catalog_entry("Q16")


def test_plane_restrictions(workbench, psl_table):
    f21 = workbench.subgroup("plane", "Z7:Z3")
    assert restrict(psl_table["W3"], f21).degrees() == [3]
    assert restrict(psl_table["W7"], f21).degrees() == [1, 3, 3]
    a4 = workbench.subgroup("plane", "A4")
    assert restrict(psl_table["W6"], a4).degrees() == [1, 1, 1, 3]


def test_cover_restrictions(workbench, cover_tables):
    u4 = cover_tables.table["U4"]
    degrees = {
        label: restrict(u4, workbench.cover_subgroup(label)).degrees()
        for label in ("S3", "D4", "A4", "S4", "Z7:Z3")
    }
    assert degrees == {"S3": [1, 1, 2], "D4": [2, 2], "A4": [2, 2], "S4": [4], "Z7:Z3": [1, 3]}


def test_restriction_needs_parent(workbench, cover_tables):
    with pytest.raises(CharacterError):
        restrict(cover_tables.table["U4"], workbench.subgroup("plane", "A4"))


def test_character_of_defining_and_given_representations(groups):
    chi = character_of(groups.plane)
    assert chi.degree == 3
    assert inner(chi, chi).is_one()
    trivial = [CycMatrix.identity(1, 1)] * len(groups.plane.generators)
    assert character_of(groups.plane, trivial) == ClassFunction.constant(groups.plane)
    with pytest.raises(CharacterError):
        character_of(groups.plane, trivial[:1])
    with pytest.raises(CharacterError):
        character_of(groups.space)
