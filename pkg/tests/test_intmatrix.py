from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from spverlinde.intmatrix import (det_bareiss, det_cofactor, hermite_basis,
                                  lattice_contains, smith_normal_form,
                                  snf_diagonal, sublattice_quotient, mat_mul)


def minor_gcd_invariants(M):
    """Independent SNF oracle: d_1...d_k = gcd of all k x k minors."""
    nr, nc = len(M), len(M[0])
    from itertools import combinations
    out = []
    prev = 1
    for k in range(1, min(nr, nc) + 1):
        g = 0
        for rows in combinations(range(nr), k):
            for cols in combinations(range(nc), k):
                sub = [[M[i][j] for j in cols] for i in rows]
                g = gcd(g, det_bareiss(sub))
        if g == 0:
            out.append(0)
            prev = 0
            continue
        out.append(g // prev if prev else 0)
        prev = g
    return out


def test_snf_already_diagonal():
    assert snf_diagonal([[2, 0], [0, 4]]) == [2, 4]


def test_snf_coprime_diagonal():
    M = [[2, 0], [0, 3]]
    assert snf_diagonal(M) == [1, 6]
    assert minor_gcd_invariants(M) == [1, 6]


def test_snf_zero_matrix():
    assert snf_diagonal([[0, 0], [0, 0]]) == [0, 0]


def test_snf_transforms_small():
    M = [[4, 2, 6], [2, 8, 4], [6, 4, 2]]
    res = smith_normal_form(M)
    D = mat_mul(mat_mul(res.U, M), res.V)
    for i in range(3):
        for j in range(3):
            assert D[i][j] == (res.diagonal[i] if i == j else 0)
    assert abs(det_bareiss(res.U)) == 1
    assert abs(det_bareiss(res.V)) == 1


small_matrix = st.integers(2, 4).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(-9, 9), min_size=n, max_size=n),
        min_size=n, max_size=n))


@settings(max_examples=40, deadline=None)
@given(small_matrix)
def test_snf_divisibility_and_transforms(M):
    res = smith_normal_form(M)
    d = res.diagonal
    for a, b in zip(d, d[1:]):
        assert (a == 0 and b == 0) or (a != 0 and b % a == 0) or b == 0
    D = mat_mul(mat_mul(res.U, M), res.V)
    n = len(M)
    for i in range(n):
        for j in range(n):
            assert D[i][j] == (d[i] if i == j else 0)
    assert abs(det_bareiss(res.U)) == 1
    assert abs(det_bareiss(res.V)) == 1
    assert d == minor_gcd_invariants(M)


UNIMODULARS = [
    [[1, 1, 0], [0, 1, 0], [0, 0, 1]],
    [[1, 0, 0], [2, 1, 0], [0, 0, 1]],
    [[0, 1, 0], [1, 0, 0], [0, 0, -1]],
    [[1, 0, 3], [0, 1, 0], [0, 0, 1]],
]


@settings(max_examples=25, deadline=None)
@given(st.lists(st.lists(st.integers(-6, 6), min_size=3, max_size=3),
                min_size=3, max_size=3),
       st.integers(0, 3), st.integers(0, 3))
def test_snf_scramble_invariance(M, i, j):
    L, R = UNIMODULARS[i], UNIMODULARS[j]
    assert snf_diagonal(M) == snf_diagonal(mat_mul(mat_mul(L, M), R))


def test_det_examples():
    assert det_bareiss([[1, 0], [0, 1]]) == 1
    assert det_bareiss([[2, 0], [0, 3]]) == 6


@settings(max_examples=30, deadline=None)
@given(st.lists(st.lists(st.integers(-9, 9), min_size=4, max_size=4),
                min_size=4, max_size=4))
def test_det_vs_cofactor(M):
    assert det_bareiss(M) == det_cofactor(M)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3),
                min_size=3, max_size=3),
       st.lists(st.lists(st.integers(-5, 5), min_size=3, max_size=3),
                min_size=3, max_size=3))
def test_det_multiplicative(A, B):
    assert det_bareiss(mat_mul(A, B)) == det_bareiss(A) * det_bareiss(B)


def test_hermite_membership():
    basis = hermite_basis([[2, 0, 4], [0, 3, 1], [0, 0, 6]])
    assert lattice_contains(basis, [2, 0, 4])
    assert lattice_contains(basis, [2, 3, 5])
    assert not lattice_contains(basis, [1, 0, 0])


def test_sublattice_quotient():
    assert sublattice_quotient([[1, 0], [0, 1]], [[2, 0], [0, 3]]) == [6]
    assert sublattice_quotient([[2, 0], [0, 1]], [[4, 0], [0, 2]]) == [2, 2]
    with pytest.raises(ValueError):
        sublattice_quotient([[2, 0], [0, 2]], [[1, 0], [0, 1]])
