from __future__ import annotations

from hypothesis import given, settings
import pytest

from clawtop.smith import (
    determinant,
    elementary_divisors,
    is_divisibility_chain,
    matmul,
    rank_over_field,
    smith_normal_form,
)

from .strategies import int_matrices


def test_known_smith_form() -> None:
    form = smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert form.divisors == (2, 6, 12)
    assert form.rank == 3
    assert form.torsion == (2, 6, 12)
    assert form.diagonal == ((2, 0, 0), (0, 6, 0), (0, 0, 12))


def test_degenerate_matrices() -> None:
    assert smith_normal_form([[0, 0], [0, 0]]).divisors == ()
    assert smith_normal_form([], ncols=3).rank == 0
    form = smith_normal_form([[1, 2, 3]])
    assert form.divisors == (1,)
    assert form.torsion == ()


def test_elementary_divisors_of_sparse_columns() -> None:
    # boundary of a hollow triangle into its vertices
    cols = [{0: -1, 1: 1}, {0: -1, 2: 1}, {1: -1, 2: 1}]
    assert elementary_divisors(cols) == (2, ())
    assert elementary_divisors([{0: 2}, {}]) == (1, (2,))
    assert elementary_divisors([]) == (0, ())


def test_determinant() -> None:
    assert determinant([[1, 2], [3, 4]]) == -2
    assert determinant([[0, 1], [1, 0]]) == -1
    assert determinant([[2, 0, 0], [0, 3, 0], [0, 0, 4]]) == 24
    assert determinant([[1, 2], [2, 4]]) == 0
    assert determinant([]) == 1
    with pytest.raises(ValueError):
        determinant([[1, 2]])


def test_rank_over_field() -> None:
    m = [[1, 1], [1, -1]]
    assert rank_over_field(m) == 2
    assert rank_over_field(m, 2) == 1
    assert rank_over_field(m, 3) == 2
    assert rank_over_field([[3, 6], [0, 3]], 3) == 0
    assert rank_over_field([]) == 0


def test_divisibility_chain() -> None:
    assert is_divisibility_chain((1, 2, 6, 12))
    assert not is_divisibility_chain((2, 3))
    assert not is_divisibility_chain((0, 2))
    assert is_divisibility_chain(())


@settings(max_examples=200, deadline=None)
@given(int_matrices())
def test_transforms_reproduce_the_diagonal(m: list[list[int]]) -> None:
    form = smith_normal_form(m)
    assert form.left is not None and form.right is not None
    d = matmul(matmul(form.left, m), form.right)
    assert d == [list(row) for row in form.diagonal]
    assert abs(determinant(form.left)) == 1
    assert abs(determinant(form.right)) == 1
    assert is_divisibility_chain(form.divisors)
    assert form.rank == rank_over_field(m)

    cols = [{i: m[i][j] for i in range(len(m))} for j in range(len(m[0]))]
    assert elementary_divisors(cols) == (form.rank, form.torsion)
