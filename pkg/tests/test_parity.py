import math
import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from kneser_transversal import errors
from kneser_transversal.parity import (
    UNBOUNDED,
    ParamTriple,
    alpha,
    beta,
    d_formula,
    d_oracle,
    i_sets,
    od,
    opti_oracle,
    opti_solve,
    parity_blocks,
    z_lower,
    z_upper,
)

index_sets = st.sets(st.integers(1, 30), min_size=1, max_size=12).map(sorted)


def test_od_examples():
    assert od([1, 4, 5, 7, 8, 10, 12]) == 3
    assert od([5]) == 0
    assert od([1, 2, 4, 7]) == 2
    with pytest.raises(errors.EmptySet):
        od([])


def test_parity_block_examples():
    assert parity_blocks([1, 4, 5, 7, 8, 10, 12]) == [[1], [4], [5, 7], [8, 10, 12]]
    assert parity_blocks([2, 4, 6]) == [[2, 4, 6]]
    assert parity_blocks([1, 2]) == [[1], [2]]


@given(index_sets)
def test_blocks_count_is_od_plus_one(s):
    assert len(parity_blocks(s)) == od(s) + 1
    assert [x for b in parity_blocks(s) for x in b] == s


def test_od_monotone_exhaustive_small():
    for size in range(1, 7):
        for t in combinations(range(1, 21), size) if size <= 3 else _sampled(size):
            for r in range(1, size + 1):
                for s in combinations(t, r):
                    assert od(s) <= od(t)


def _sampled(size, count=300):
    rng = random.Random(size)
    return [sorted(rng.sample(range(1, 21), size)) for _ in range(count)]


@given(st.data())
def test_od_monotone_random(data):
    t = data.draw(st.sets(st.integers(1, 20), min_size=1, max_size=20).map(sorted))
    s = sorted(data.draw(st.sets(st.sampled_from(t), min_size=1)))
    assert od(s) <= od(t)


def test_d_formula_cases():
    assert d_formula(4, 2) == 5
    assert d_formula(3, 0) is UNBOUNDED
    assert d_formula(2, 5) == 1


def test_d_oracle_examples():
    assert d_oracle(4, 2, 10) == 5
    assert d_oracle(2, 5, 6) == 1
    for k in range(1, 7):
        assert d_oracle(k, k, 2 * k + 2) == k - 1 == d_formula(k, k)


def test_d_formula_matches_oracle_grid():
    for k in range(1, 9):
        for l in range(1, k + 1):
            assert d_formula(k, l) == d_oracle(k, l, 2 * k)
        for l in range(k, 11):
            assert d_formula(k, l) == d_oracle(k, l, 2 * k)


def test_alpha_beta():
    assert alpha(4, 3) == 1
    assert alpha(5, 2) == Fraction(1, 3)
    assert all(alpha(d, 1) == 0 for d in range(1, 10))
    assert beta(2, 3) == 2 and beta(2, 5) == 3 and beta(3, 3) == 3


def test_i_sets_d5_l2():
    sets = i_sets(5, 2)
    assert sets == [[1, 2, 4], [2, 3, 5], [1, 3, 4], [2, 4, 5], [1, 3, 5]]
    assert all(sum(x in s for s in sets) == 3 for x in range(1, 6))
    assert all(od(s) <= 1 for s in sets)


def nontrivial_pairs(d_max):
    return [(d, lam) for d in range(1, d_max + 1) for lam in range(1, d + 1) if alpha(d, lam) < 1]


@pytest.mark.parametrize("d,lam", nontrivial_pairs(12))
def test_i_sets_properties(d, lam):
    sets = i_sets(d, lam)
    half = math.ceil(d / 2)
    assert len(sets) == 2 * half - lam + 1
    assert all(sum(x in s for s in sets) == half for x in range(1, d - lam + 3))
    assert all(od(s) <= lam - 1 for s in sets)
    if d % 2:
        assert all(len(s) == (d + 1) // 2 for s in sets)


def test_i_sets_errors():
    with pytest.raises(errors.BadRange):
        i_sets(2, 3)
    with pytest.raises(errors.BadRange):
        i_sets(4, 3)


def test_z_examples():
    assert z_lower(ParamTriple(3, 5, 2)) == 7
    assert z_lower(ParamTriple(4, 5, 2)) == 9
    # j = 3, 5, 7 give 3, 2, 2
    assert z_lower(ParamTriple(3, 7, 2)) == 6 + 3
    assert z_upper(ParamTriple(3, 5, 2)) == 7
    assert z_upper(ParamTriple(2, 3, 1)) == 5
    assert z_upper(ParamTriple(10, 4, 2)) == 16


def test_z_range_errors():
    with pytest.raises(errors.RangeViolation):
        z_lower(ParamTriple(4, 4, 3))
    with pytest.raises(errors.RangeViolation):
        z_upper(ParamTriple(2, 5, 2))


def test_z_below_Z_grid():
    for d, lam in nontrivial_pairs(12):
        for k in range(lam + 1, 41):
            p = ParamTriple(k, d, lam)
            assert z_lower(p) <= z_upper(p)


def test_z_upper_lambda_one_is_halving_bound():
    for d in range(1, 9):
        for k in range(2, 12):
            assert z_upper(ParamTriple(k, d, 1)) == d + 2 * (k - 1)


def test_opti_examples():
    assert opti_solve(3, 2, 3) == opti_oracle(3, 2, 3)
    s = opti_solve(3, 2, 3)
    assert (s.a, s.r, s.value) == (1, 0, 3)
    s = opti_solve(5, 2, 5)
    assert (s.a, s.r, s.value) == (1, 1, 6)
    assert opti_oracle(5, 2, 5).value == 6
    s = opti_solve(2, 3, 6)  # k-1 = 1 < β = 4
    assert (s.a, s.r, s.value) == (0, 1, 1)


def test_opti_grid_and_case():
    for k in range(1, 11):
        for lam in range(1, 5):
            for j in range(lam + 1, 11):
                sol = opti_solve(k, lam, j)
                assert sol == opti_oracle(k, lam, j)
                assert sol.r <= beta(lam, j) - 1
