from fractions import Fraction

from hypothesis import given, settings, strategies as st

from kneser_transversal.linalg import det, nullspace, rank, rref
from kneser_transversal.lp import feasible_point, phase_one


def test_rref_identity_and_pivots():
    m, piv = rref([[2, 4, 2], [1, 2, 3]])
    assert piv == [0, 2]
    assert m == [[1, 2, 0], [0, 0, 1]]


def test_nullspace_first_free_column_order():
    basis = nullspace([[1, 1, 1, 1]])
    assert basis[0] == [-1, 1, 0, 0]
    assert len(basis) == 3


def test_det_matches_cofactor_expansion():
    a = [[2, -1, 0], [1, 3, 4], [0, 5, -2]]
    cof = 2 * (3 * -2 - 4 * 5) - (-1) * (1 * -2 - 4 * 0) + 0
    assert det(a) == cof


small_int = st.integers(-6, 6)


@given(st.lists(st.lists(small_int, min_size=4, max_size=4), min_size=1, max_size=4))
@settings(max_examples=80, deadline=None)
def test_nullspace_vectors_are_annihilated(rows):
    basis = nullspace(rows)
    assert len(basis) == 4 - rank(rows)
    for v in basis:
        assert all(sum(Fraction(a) * b for a, b in zip(r, v)) == 0 for r in rows)


@given(st.lists(st.lists(small_int, min_size=5, max_size=5), min_size=1, max_size=4),
       st.lists(st.integers(0, 4), min_size=5, max_size=5))
@settings(max_examples=80, deadline=None)
def test_phase_one_finds_point_when_one_exists(a, x0):
    b = [sum(r[j] * x0[j] for j in range(5)) for r in a]
    x = phase_one(a, b)
    assert x is not None
    assert all(v >= 0 for v in x)
    assert [sum(r[j] * x[j] for j in range(5)) for r in a] == b


def test_phase_one_infeasible():
    # x1 + x2 = 1 and x1 + x2 = 2
    assert phase_one([[1, 1], [1, 1]], [1, 2]) is None
    # x1 + x2 = 0 forces x = 0, which violates x1 - x2 = -1
    assert phase_one([[1, -1], [1, 1]], [-1, 0]) is None


def test_free_variables_may_go_negative():
    x = feasible_point([[1, 1]], [-3], free=[0])
    assert x is not None and x[0] + x[1] == -3 and x[1] >= 0
    assert feasible_point([[1, 1]], [-3]) is None


def test_degenerate_cycling_prone_instance_terminates():
    # Beale-style degenerate system; Bland's rule must terminate
    a = [[Fraction(1, 4), -8, -1, 9, 1, 0, 0],
         [Fraction(1, 2), -12, Fraction(-1, 2), 3, 0, 1, 0],
         [0, 0, 1, 0, 0, 0, 1]]
    x = phase_one(a, [0, 0, 1])
    assert x is not None
