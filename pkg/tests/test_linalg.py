"""Exact rational matrices and affine maps."""

from fractions import Fraction

import pytest

from branchlab.linalg import AffineMap, affine, dot, mat, rank, solve, vec


def test_vec_and_dot():
    v = vec([1, "1/2", Fraction(3, 4)])
    assert v == (Fraction(1), Fraction(1, 2), Fraction(3, 4))
    assert dot(v, vec([4, 4, 4])) == 9
    with pytest.raises(ValueError):
        dot(vec([1]), vec([1, 2]))


def test_rank():
    assert rank(mat([[1, 2], [2, 4]])) == 1
    assert rank(mat([[1, 2], [3, 4]])) == 2
    assert rank(mat([[0, 0], [0, 0]])) == 0
    assert rank(mat([["1/2", 1, 0], [0, 1, 1]])) == 2


def test_solve_consistent_and_inconsistent():
    m = mat([[1, 1], [1, -1]])
    x = solve(m, vec([3, 1]))
    assert x == (Fraction(2), Fraction(1))
    assert solve(mat([[1, 1], [2, 2]]), vec([1, 3])) is None
    # underdetermined: free variables pinned to zero, still a valid solution
    m = mat([[1, 1, 0]])
    x = solve(m, vec([5]))
    assert sum(a * b for a, b in zip(m[0], x)) == 5


def test_affine_map():
    f = affine([[1, 2], [0, 1]], [5, "1/2"])
    assert f.apply((1, 1)) == (Fraction(8), Fraction(3, 2))
    assert f.source_dim == 2 and f.target_dim == 2
    with pytest.raises(ValueError):
        f.apply((1, 2, 3))
    empty = AffineMap(mat([]), vec([]), source=3)
    assert empty.apply((1, 2, 3)) == ()
    with pytest.raises(ValueError):
        AffineMap(mat([[1, 2]]), vec([1, 2]))
