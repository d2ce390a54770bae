"""Exact rational linear algebra kernels."""

from fractions import Fraction

import pytest

from cdlie.errors import NotSymmetric
from cdlie.linalg import (
    decompose_in_rref,
    kernel_dimension,
    nullspace,
    rref,
    symmetric_inertia,
)


def test_rref_identity_like():
    rows = [[2, 0, 4], [0, 3, 6]]
    reduced, pivots = rref(rows)
    assert pivots == [0, 1]
    assert reduced == [[1, 0, 2], [0, 1, 2]]


def test_rref_drops_dependent_rows():
    rows = [[1, 2], [2, 4], [3, 6]]
    reduced, pivots = rref(rows)
    assert reduced == [[1, 2]]
    assert pivots == [0]


def test_rref_column_skip():
    # first column identically zero, pivot lands in column 1
    rows = [[0, 5, 10]]
    reduced, pivots = rref(rows)
    assert reduced == [[0, 1, 2]]
    assert pivots == [1]


def test_rref_fractions_exact():
    rows = [[Fraction(1, 3), Fraction(1, 6)], [Fraction(1, 2), Fraction(1, 4)]]
    reduced, pivots = rref(rows)
    # second row is 3/2 times the first
    assert reduced == [[1, Fraction(1, 2)]]
    assert pivots == [0]


def test_decompose_in_rref_inside_and_outside():
    reduced, pivots = rref([[1, 0, 1], [0, 1, 1]])
    assert decompose_in_rref([2, 3, 5], reduced, pivots) == [2, 3]
    assert decompose_in_rref([2, 3, 4], reduced, pivots) is None


def test_decompose_zero_vector():
    reduced, pivots = rref([[1, 1]])
    assert decompose_in_rref([0, 0], reduced, pivots) == [0]


def test_nullspace_simple():
    # x + y + z = 0
    basis = nullspace([[1, 1, 1]], 3)
    assert len(basis) == 2
    for v in basis:
        assert sum(v) == 0


def test_nullspace_full_rank_is_empty():
    assert nullspace([[1, 0], [0, 1]], 2) == []


def test_kernel_dimension():
    assert kernel_dimension([], 4) == 4
    assert kernel_dimension([[1, 2, 3]], 3) == 2
    assert kernel_dimension([[1, 0], [0, 1]], 2) == 0


def test_inertia_diagonal():
    assert symmetric_inertia([[2, 0, 0], [0, -3, 0], [0, 0, 0]]) == (1, 1, 1)


def test_inertia_hyperbolic_block():
    # zero diagonal forces the 2x2 block pivot path
    assert symmetric_inertia([[0, 1], [1, 0]]) == (1, 1, 0)


def test_inertia_positive_definite():
    # Gram matrix of a random full-rank integer basis of R^3
    b = [[1, 2, 0], [0, 1, 1], [1, 0, 3]]
    g = [[sum(b[i][k] * b[j][k] for k in range(3)) for j in range(3)] for i in range(3)]
    assert symmetric_inertia(g) == (3, 0, 0)


def test_inertia_mixed_with_offdiagonal():
    # congruent to diag(1, -1): det negative, trace zero
    assert symmetric_inertia([[1, 2], [2, -1]]) == (1, 1, 0)


def test_inertia_rejects_nonsymmetric():
    with pytest.raises(NotSymmetric):
        symmetric_inertia([[0, 1], [2, 0]])
    with pytest.raises(NotSymmetric):
        symmetric_inertia([[0, 1, 2], [1, 0, 3]])


def test_inertia_sylvester_stability():
    # congruence by an invertible matrix must not change the inertia
    d = [[1, 0, 0], [0, -1, 0], [0, 0, -1]]
    s = [[1, 1, 0], [0, 1, 1], [1, 0, 1]]  # det 2
    m = [
        [
            sum(s[i][a] * d[a][b] * s[j][b] for a in range(3) for b in range(3))
            for j in range(3)
        ]
        for i in range(3)
    ]
    assert symmetric_inertia(m) == (1, 2, 0)
