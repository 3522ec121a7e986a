import random

import numpy as np
import pytest
import sympy

from flag_reconstruction.smith import identity, integer_matrix, smith_normal_form


def test_known_example() -> None:
    form = smith_normal_form(integer_matrix([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]))
    assert form.invariant_factors == (2, 6, 12)
    assert form.torsion == (2, 6, 12)
    assert form.rank == 3


def test_zero_and_degenerate_shapes() -> None:
    assert smith_normal_form(integer_matrix([[0, 0], [0, 0]])).rank == 0
    empty = smith_normal_form(integer_matrix([], cols=3))
    assert empty.rank == 0
    assert empty.diagonal.shape == (0, 3)
    assert smith_normal_form(identity(4)).invariant_factors == (1, 1, 1, 1)


def test_unit_factors_are_not_torsion() -> None:
    form = smith_normal_form(integer_matrix([[1, 0], [0, 2]]))
    assert form.invariant_factors == (1, 2)
    assert form.torsion == (2,)


def test_entries_do_not_overflow() -> None:
    big = 2**80
    form = smith_normal_form(integer_matrix([[big, 0], [0, big * 3]]))
    assert form.invariant_factors == (big, big * 3)


def test_ragged_rows_are_rejected() -> None:
    with pytest.raises(ValueError, match="Row 1"):
        integer_matrix([[1, 2], [3]])


def test_random_matrices_with_transforms() -> None:
    rng = random.Random(7)
    for _ in range(1000):
        rows, cols = rng.randint(1, 4), rng.randint(1, 4)
        m = integer_matrix([[rng.randint(-5, 5) for _ in range(cols)] for _ in range(rows)])
        form = smith_normal_form(m, with_transforms=True)
        U, V, D = form.left, form.right, form.diagonal
        assert U is not None
        assert V is not None
        assert (U @ m @ V == D).all()
        assert abs(sympy.Matrix(U.tolist()).det()) == 1
        assert abs(sympy.Matrix(V.tolist()).det()) == 1

        off_diagonal = D.copy()
        for i in range(min(rows, cols)):
            off_diagonal[i, i] = 0
        assert not off_diagonal.any()
        factors = form.invariant_factors
        assert all(d > 0 for d in factors)
        assert all(b % a == 0 for a, b in zip(factors, factors[1:]))
        assert form.rank == sympy.Matrix(m.tolist()).rank()
        assert all(D[i, i] == 0 for i in range(form.rank, min(rows, cols)))


def test_transforms_are_optional() -> None:
    form = smith_normal_form(integer_matrix([[4, 6]]))
    assert form.left is None
    assert form.right is None
    assert form.invariant_factors == (2,)
    assert np.array_equal(form.diagonal, integer_matrix([[2, 0]]))
