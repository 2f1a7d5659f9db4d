from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import falling_binomial, pascal_triangle
from superpatalan.exact import Params, as_integer, binom_integer, binom_rational, sign_power


@pytest.mark.parametrize("n,k,expected", [(4, 2, 6), (6, 3, 20), (0, 0, 1), (7, 0, 1), (-3, 0, 1)])
def test_binom_integer_values(n, k, expected):
    assert binom_integer(n, k) == expected


def test_binom_integer_negative_k_is_zero():
    assert binom_integer(5, -1) == 0
    assert binom_integer(-5, -2) == 0


def test_binom_integer_negative_n_uses_product_formula():
    for n in range(-6, 0):
        for k in range(8):
            assert binom_integer(n, k) == falling_binomial(n, k)


def test_binom_integer_matches_pascal_triangle():
    rows = pascal_triangle(40)
    for n, row in enumerate(rows):
        for k, v in enumerate(row):
            assert binom_integer(n, k) == v
        assert binom_integer(n, n + 1) == 0


@given(st.integers(-50, 200), st.integers(1, 60))
def test_pascal_rule(n, k):
    assert binom_integer(n, k) == binom_integer(n - 1, k - 1) + binom_integer(n - 1, k)


def test_binom_rational_examples():
    assert binom_rational(Fraction(2, 3), 2) == Fraction(-1, 9)
    assert binom_rational(Fraction(-1, 2), 1) == Fraction(-1, 2)
    assert binom_rational(Fraction(17, 5), 0) == 1


def test_binom_rational_rejects_negative_k():
    with pytest.raises(ValueError):
        binom_rational(Fraction(1, 2), -1)


@given(st.integers(0, 80), st.data())
def test_binom_rational_agrees_with_integer(n, data):
    k = data.draw(st.integers(0, n))
    assert binom_rational(n, k) == binom_integer(n, k)


@given(st.fractions(max_denominator=50), st.integers(0, 25))
def test_binom_rational_against_falling_factorial(alpha, k):
    assert binom_rational(alpha, k) == falling_binomial(alpha, k)


big = st.integers(-(10**60), 10**60)
nonzero_big = big.filter(bool)


@given(big, nonzero_big, big, nonzero_big)
def test_fraction_round_trip(a, b, c, d):
    x, y = Fraction(a, b), Fraction(c, d)
    assert (x + y) - y == x
    assert x.denominator > 0


def test_as_integer():
    assert as_integer(Fraction(10, 2)) == 5
    with pytest.raises(ArithmeticError):
        as_integer(Fraction(1, 3))
    with pytest.raises(TypeError):
        as_integer(2.0)


def test_sign_power_stays_integral():
    assert [sign_power(n) for n in range(-3, 4)] == [-1, 1, -1, 1, -1, 1, -1]
    assert all(type(sign_power(n)) is int for n in range(-3, 4))


@pytest.mark.parametrize("p,q", [(1, 1), (3, 0), (3, 3), (2, 5)])
def test_params_validation(p, q):
    with pytest.raises(ValueError):
        Params(p, q)


def test_params_dual():
    assert Params(7, 2).dual == Params(7, 5)
