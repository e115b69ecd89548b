import pytest

from src.cyclotomic.field import CycNum
from src.errors import DataFileError, ShapeError, SingularMatrixError
from src.linalg.io import dumps_matrices, loads_matrices, split_entries
from src.linalg.matrix import CycMatrix, eigenspace, eigenspaces, kernel, multiplicative_order

MATRICES = """
# two small matrices
@conductor 4
@matrix rot
0; -1
1; 0

@matrix scaled
@scale 1/2
2; z
0; 2
"""


def test_determinants():
    assert CycMatrix.identity(3).det().is_one()
    assert (CycMatrix.from_rows([[1, 2], [3, 4]]).det() + 2).is_zero()
    upper = CycMatrix.from_rows([
        [2, 1, 0, 0, 0],
        [0, 3, 1, 0, 0],
        [0, 0, 1, 4, 0],
        [0, 0, 0, 5, 1],
        [0, 0, 0, 0, 7],
    ])
    assert (upper.det() - 210).is_zero()
    assert CycMatrix.zeros(6, 6).det().is_zero()
    with pytest.raises(ShapeError):
        CycMatrix.zeros(2, 3).det()


def test_inverse():
    i = CycNum.zeta(4)
    m = CycMatrix.from_rows([[1, i], [i, 3]])
    assert (m @ m.inverse()).is_identity()
    with pytest.raises(SingularMatrixError):
        CycMatrix.from_rows([[1, 2], [2, 4]]).inverse()


def test_rank_and_kernel():
    m = CycMatrix.from_rows([[1, 1, 0], [2, 2, 0]])
    assert m.rank() == 1
    space = kernel(m)
    assert space.dim == 2
    assert space.contains([CycNum.from_int(1), CycNum.from_int(-1), CycNum.zero()])
    assert not space.contains([CycNum.from_int(1), CycNum.from_int(1), CycNum.zero()])


def test_apply_row_is_left_multiplication():
    m = CycMatrix.from_rows([[1, 2], [3, 4]])
    v = [CycNum.from_int(1), CycNum.from_int(1)]
    assert [int(x.to_fraction()) for x in m.apply_row(v)] == [4, 6]


def test_finite_order_and_eigenspaces():
    rot = CycMatrix.from_rows([[0, -1], [1, 0]])
    assert multiplicative_order(rot) == 4
    spaces = eigenspaces(rot)
    assert len(spaces) == 2
    assert all(s.dim == 1 for _, s in spaces)
    assert multiplicative_order(CycMatrix.diag([CycNum.one(), CycNum.from_int(-1)])) == 2


def test_matrix_file():
    matrices = loads_matrices(MATRICES)
    assert set(matrices) == {"rot", "scaled"}
    assert multiplicative_order(matrices["rot"]) == 4
    scaled = matrices["scaled"]
    assert scaled[0, 0].is_one()
    assert (scaled[0, 1] - CycNum.zeta(4) / 2).is_zero()
    again = loads_matrices(dumps_matrices(matrices))
    assert again["scaled"] == scaled


def test_matrix_file_errors():
    with pytest.raises(DataFileError):
        loads_matrices("1; 2\n")
    with pytest.raises(DataFileError):
        loads_matrices("@matrix empty\n")


def test_split_entries_respects_parentheses():
    assert split_entries("cyc(7; z); 2; (1; 2)") == ["cyc(7; z)", "2", "(1; 2)"]


def test_eigenspace_of_a_diagonal_matrix():
    m = CycMatrix.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 2]])
    assert eigenspace(m, CycNum.from_int(1)).dim == 2
    assert eigenspace(m, CycNum.from_int(2)).dim == 1
    assert eigenspace(m, CycNum.from_int(3)).dim == 0
    with pytest.raises(ShapeError):
        eigenspace(CycMatrix.from_rows([[1, 0, 0]]), CycNum.from_int(1))
