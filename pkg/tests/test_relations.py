import pytest
import sympy

from src.algebra import IntPoly, TruncatedSeries
from src.core import (Theory, base_series, complex_denominator,
                      complex_relation, denominator, f_polynomial, k_series,
                      ko_relation_expanded, m_series, real_denominator,
                      relation_polynomial)
from src.errors import InvalidPrime

SMALL_PRIMES = [int(p) for p in sympy.primerange(3, 32)]


def test_theory_exponents():
    assert Theory.COMPLEX.base_exponent(7) == 7
    assert Theory.COMPLEX.carry_shift(7) == 6
    assert Theory.REAL.base_exponent(7) == 4
    assert Theory.REAL.carry_shift(7) == 3
    assert Theory.parse(" Real ") is Theory.REAL
    with pytest.raises(ValueError):
        Theory.parse("quaternionic")


def test_complex_relation():
    assert complex_relation(3) == IntPoly([0, 3, 3, 1])
    assert complex_relation(5) == IntPoly([0, 5, 10, 10, 5, 1])
    assert complex_relation(7)[2] == 21


@pytest.mark.parametrize(
    "p, expected", [(3, [1, 1]), (5, [1, 2, 2, 1]), (7, [1, 3, 5, 5, 3, 1])]
)
def test_complex_denominator(p, expected):
    assert complex_denominator(p) == IntPoly(expected)
    assert complex_denominator(p).degree == p - 2


@pytest.mark.parametrize("p, expected", [(3, [3, 1]), (5, [5, 5, 1]), (7, [7, 14, 7, 1])])
def test_f_polynomial(p, expected):
    assert f_polynomial(p) == IntPoly(expected)


@pytest.mark.parametrize("p, expected", [(3, [0, 3, 1]), (5, [0, 5, 5, 1]), (7, [0, 7, 14, 7, 1])])
def test_ko_relation_expanded(p, expected):
    assert ko_relation_expanded(p) == IntPoly(expected)


@pytest.mark.parametrize("p", [int(q) for q in sympy.primerange(3, 102)])
def test_ko_relation_is_w_times_f(p):
    f = f_polynomial(p)
    assert f.is_monic() and f.degree == (p - 1) // 2 and f[0] == p
    assert ko_relation_expanded(p) == f.shift(1)


def test_relation_polynomial_dispatch():
    assert relation_polynomial(Theory.COMPLEX, 5) == complex_relation(5)
    assert relation_polynomial("real", 5) == ko_relation_expanded(5)
    assert denominator(Theory.REAL, 7) == real_denominator(7)


def test_relations_reject_non_primes():
    with pytest.raises(InvalidPrime):
        complex_relation(9)
    with pytest.raises(InvalidPrime):
        f_polynomial(15)


@pytest.mark.parametrize(
    "p, expected",
    [
        (3, [-1, 1, -1, 1, -1, 1]),
        (5, [-1, 2, -2, 1, 0, 0]),
        (23, [-1, 11, -44, 22, 374, -572, -4224]),
    ],
)
def test_k_series(p, expected):
    assert k_series(p, len(expected)).to_list() == expected


@pytest.mark.parametrize(
    "p, expected",
    [
        (3, [-1, 0, 0, 0, 0, 0]),
        (5, [-1, 1, -1, 1, -1, 1]),
        (23, [-1, 22, -341, 4785]),
    ],
)
def test_m_series(p, expected):
    assert m_series(p, len(expected)).to_list() == expected


def test_series_order_must_be_positive():
    with pytest.raises(ValueError):
        k_series(5, 0)


@pytest.mark.parametrize("theory", list(Theory))
@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_series_times_denominator_is_minus_one(theory, p):
    order = 40
    series = base_series(theory, p, order)
    den = TruncatedSeries.from_poly(denominator(theory, p), order)
    assert (series * den).to_list() == [-1] + [0] * (order - 1)


def test_series_are_deterministic():
    assert k_series(13, 50) == k_series(13, 50)
    assert m_series(13, 50).to_list() == m_series(13, 50).to_list()
