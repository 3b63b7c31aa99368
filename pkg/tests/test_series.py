import random
from fractions import Fraction

import pytest

from src.algebra import (INTEGERS, POLYNOMIALS_IN_P, RATIONALS, IntPoly,
                         PolynomialInP, TruncatedSeries, series_inverse)
from src.errors import NonUnitConstantTerm


def test_of_pads_and_truncates():
    assert TruncatedSeries.of([1, 2], INTEGERS, 4).to_list() == [1, 2, 0, 0]
    assert TruncatedSeries.of([1, 2, 3], INTEGERS, 2).to_list() == [1, 2]


def test_inverse_of_one_minus_x():
    d = TruncatedSeries.of([1, -1], INTEGERS, 6)
    assert d.inverse().to_list() == [1] * 6


def test_inverse_requires_unit():
    with pytest.raises(NonUnitConstantTerm):
        TruncatedSeries.of([2, 1], INTEGERS, 4).inverse()
    with pytest.raises(NonUnitConstantTerm):
        TruncatedSeries.of([PolynomialInP.p()], POLYNOMIALS_IN_P, 3).inverse()


@pytest.mark.parametrize("seed", range(15))
def test_inverse_multiplies_back_over_integers(seed):
    rng = random.Random(seed)
    order = rng.randint(1, 25)
    coeffs = [rng.choice([1, -1])] + [rng.randint(-9, 9) for _ in range(order - 1)]
    d = TruncatedSeries.of(coeffs, INTEGERS)
    assert (d * series_inverse(d)).to_list() == TruncatedSeries.one(order).to_list()


@pytest.mark.parametrize("seed", range(5))
def test_inverse_multiplies_back_over_rationals(seed):
    rng = random.Random(100 + seed)
    coeffs = [Fraction(rng.randint(1, 5), rng.randint(1, 5))] + [
        Fraction(rng.randint(-5, 5), rng.randint(1, 7)) for _ in range(9)
    ]
    d = TruncatedSeries.of(coeffs, RATIONALS)
    assert (d * d.inverse()).to_list() == TruncatedSeries.one(10, RATIONALS).to_list()


def test_inverse_over_polynomials_in_p():
    p = PolynomialInP.p()
    d = TruncatedSeries.of([1, p], POLYNOMIALS_IN_P, 4)
    inv = d.inverse()
    assert inv.to_list() == [1, -p, p * p, -(p * p * p)]


def test_orders_combine_to_minimum():
    a = TruncatedSeries.of([1, 2, 3], INTEGERS)
    b = TruncatedSeries.of([1, 1], INTEGERS)
    assert (a + b).to_list() == [2, 3]
    assert (a * b).to_list() == [1, 3]
    assert (a - a).to_list() == [0, 0, 0]


def test_shift_and_from_poly():
    s = TruncatedSeries.from_poly(IntPoly([1, 2, 3]), 5)
    assert s.to_list() == [1, 2, 3, 0, 0]
    assert s.shift(2).to_list() == [0, 0, 1, 2, 3, 0, 0]
    with pytest.raises(ValueError):
        s.shift(-1)
    assert s.truncate(2).to_list() == [1, 2]


@pytest.mark.parametrize("seed", range(10))
def test_inverse_commutes_with_truncation(seed):
    rng = random.Random(200 + seed)
    order = rng.randint(2, 30)
    coeffs = [rng.choice([1, -1])] + [rng.randint(-9, 9) for _ in range(order - 1)]
    d = TruncatedSeries.of(coeffs, INTEGERS)
    for m in (1, order // 2, order):
        assert series_inverse(d).truncate(m) == series_inverse(d.truncate(m))
