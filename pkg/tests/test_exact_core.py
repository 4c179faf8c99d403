import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from spverlinde.cycfield import CycNumber, SingularMatrix, get_field, solve_exact
from spverlinde.unipoly import cyclotomic_poly, euler_phi, peval


def cyclotomic_numeric(N):
    """Independent oracle: expand prod (x - zeta^k) over primitive k, round."""
    from math import gcd
    poly = [1.0 + 0j]
    for k in range(1, N + 1):
        if gcd(k, N) == 1:
            root = cmath.exp(2j * cmath.pi * k / N)
            new = [0j] * (len(poly) + 1)
            for i, c in enumerate(poly):
                new[i + 1] += c
                new[i] -= root * c
            poly = new
    return [round(c.real) for c in poly]


@pytest.mark.parametrize("N,expected", [
    (1, [-1, 1]),
    (2, [1, 1]),
    (4, [1, 0, 1]),
    (12, [1, 0, -1, 0, 1]),
])
def test_cyclotomic_known(N, expected):
    assert cyclotomic_poly(N) == expected


@pytest.mark.parametrize("N", [3, 5, 6, 8, 9, 10, 12, 14, 15, 24])
def test_cyclotomic_vs_numeric(N):
    assert cyclotomic_poly(N) == cyclotomic_numeric(N)


@pytest.mark.parametrize("N", [4, 6, 8, 12, 14])
def test_zeta_relations(N):
    z = CycNumber.zeta(N)
    assert z ** N == 1
    # minimal polynomial vanishes
    f = get_field(N)
    acc = f.zero
    xp = f.one
    for c in cyclotomic_poly(N):
        acc = f.add(acc, f.mul_int(xp, c))
        xp = f.mul(xp, z.raw)
    assert f.is_zero(acc)


coef = st.integers(-5, 5)


@settings(max_examples=40, deadline=None)
@given(st.lists(coef, min_size=4, max_size=4), st.lists(coef, min_size=4, max_size=4))
def test_field_inverse_roundtrip(avec, bvec):
    f = get_field(12)
    a = f._reduce_ints(avec)
    b = f._reduce_ints(bvec)
    if f.is_zero(a):
        return
    prod = f.mul(a, b)
    back = f.mul(prod, f.inv(a))
    assert back == b


def test_inverse_of_zero_raises():
    f = get_field(8)
    with pytest.raises(ZeroDivisionError):
        f.inv(f.zero)


def test_solve_identity():
    f = get_field(6)
    one = CycNumber(f, f.one)
    zero = CycNumber(f, f.zero)
    b = [CycNumber(f, f.zeta(k)) for k in range(3)]
    A = [[one if i == j else zero for j in range(3)] for i in range(3)]
    assert solve_exact(A, b) == b


def test_solve_zeta4():
    z = CycNumber.zeta(4)
    one = CycNumber.rational(4, 1)
    (x,) = solve_exact([[z]], [one])
    assert x == z.inverse()
    assert x == -(z ** 3)


def test_solve_random_3x3_residual():
    f = get_field(6)
    import random
    rng = random.Random(7)
    for _ in range(5):
        A = [[CycNumber(f, f._reduce_ints([rng.randrange(-4, 5)
                                           for _ in range(2)]))
              for _ in range(3)] for _ in range(3)]
        b = [CycNumber(f, f._reduce_ints([rng.randrange(-4, 5)
                                          for _ in range(2)])) for _ in range(3)]
        try:
            x = solve_exact(A, b)
        except SingularMatrix:
            continue
        for i in range(3):
            acc = CycNumber(f, f.zero)
            for j in range(3):
                acc = acc + A[i][j] * x[j]
            assert acc == b[i]


def test_solve_singular_raises():
    f = get_field(4)
    one = CycNumber(f, f.one)
    two = one + one
    with pytest.raises(SingularMatrix):
        solve_exact([[one, one], [two, two]], [one, one])


def test_phi_lengths():
    assert euler_phi(1) == 1
    assert euler_phi(12) == 4
    assert euler_phi(14) == 6


def test_rational_detection():
    f = get_field(10)
    half = f.from_rational(Fraction(1, 2))
    assert f.is_rational(half)
    assert f.as_fraction(half) == Fraction(1, 2)
    assert not f.is_rational(f.zeta(1))
