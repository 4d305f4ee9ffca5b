"""Exact linear algebra basics."""

from fractions import Fraction

from hypothesis import given, strategies as st

from coconvex.linalg import (det, dot, independent_subset, nullspace, primitive,
                             rank, scale_to_int, solve)


def test_det_known():
    assert det([(1, 0), (0, 1)]) == 1
    assert det([(2, 0), (0, 3)]) == 6
    assert det([(1, 2), (2, 4)]) == 0
    assert det([(0, 1), (1, 0)]) == -1
    assert det([(Fraction(1, 2), 0), (0, Fraction(1, 3))]) == Fraction(1, 6)


def test_rank_and_independent_subset():
    rows = [(1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 2)]
    assert rank(rows) == 3
    idx = independent_subset(rows, 3)
    assert idx == [0, 1, 3]
    assert independent_subset(rows[:3], 3) is None


def test_solve_square_and_inconsistent():
    assert solve([(2, 0), (0, 4)], (1, 1)) == (Fraction(1, 2), Fraction(1, 4))
    assert solve([(1, 1), (2, 2)], (1, 3)) is None
    # consistent rectangular
    assert solve([(1, 1), (2, 2)], (1, 2)) == (Fraction(1), Fraction(0))


def test_nullspace():
    basis = nullspace([(1, 1, 0)])
    assert len(basis) == 2
    for v in basis:
        assert dot((1, 1, 0), v) == 0


def test_primitive_and_scale_to_int():
    assert primitive((2, 4, 6)) == (1, 2, 3)
    assert primitive((Fraction(1, 2), Fraction(1, 3))) == (3, 2)
    assert primitive((0, -2)) == (0, -1)
    assert scale_to_int((Fraction(1, 2), 1)) == (1, 2)


@given(st.lists(st.integers(-50, 50), min_size=9, max_size=9))
def test_det_transpose_invariant(flat):
    m = [tuple(flat[0:3]), tuple(flat[3:6]), tuple(flat[6:9])]
    mt = [tuple(r[i] for r in m) for i in range(3)]
    assert det(m) == det(mt)


@given(st.lists(st.integers(-9, 9), min_size=4, max_size=4),
       st.lists(st.integers(-9, 9), min_size=2, max_size=2))
def test_solve_round_trip(flat, rhs):
    m = [tuple(flat[0:2]), tuple(flat[2:4])]
    if det(m) == 0:
        return
    x = solve(m, rhs)
    assert [dot(row, x) for row in m] == [Fraction(b) for b in rhs]
