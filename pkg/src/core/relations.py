from __future__ import annotations

import logging
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import factorial

from src.algebra import INTEGERS, IntPoly, RatPoly, TruncatedSeries
from src.arith import OddPrime, binomial, exact_quotient
from src.errors import ConsistencyViolation


class Theory(str, Enum):
    COMPLEX = "complex"
    REAL = "real"

    @classmethod
    def parse(cls, value) -> "Theory":
        if isinstance(value, Theory):
            return value
        return cls(str(value).strip().lower())

    @property
    def generator(self) -> str:
        return "mu" if self is Theory.COMPLEX else "omega"

    def base_exponent(self, p: OddPrime | int) -> int:
        p = int(p)
        return p if self is Theory.COMPLEX else (p + 1) // 2

    def carry_shift(self, p: OddPrime | int) -> int:
        """Distance d a rebalancing carry travels: base_exponent - 1."""
        return self.base_exponent(p) - 1


def _odd_factor_product(p: int, count: int) -> int:
    """(p^2 - 1^2)(p^2 - 3^2)...(p^2 - (2*count - 1)^2)."""
    out = 1
    for i in range(1, count + 1):
        out *= p * p - (2 * i - 1) ** 2
    return out


@lru_cache(maxsize=None)
def complex_relation(p: OddPrime) -> IntPoly:
    """(1 + mu)^p - 1."""
    p = OddPrime.of(p)
    return IntPoly([0] + [binomial(p.value, k) for k in range(1, p.value + 1)])


@lru_cache(maxsize=None)
def complex_denominator(p: OddPrime) -> IntPoly:
    """((1 + mu)^p - 1 - mu^p) / (p mu), integral because p | C(p, k) for 0 < k < p."""
    p = OddPrime.of(p)
    n = p.value
    return IntPoly(
        [1]
        + [exact_quotient(binomial(n, k), n, f"C({n},{k})/{n}") for k in range(2, n)]
    )


@lru_cache(maxsize=None)
def f_polynomial(p: OddPrime) -> IntPoly:
    """
    f_p(w) = p + sum_{j=1}^{(p-3)/2} p(p^2-1^2)...(p^2-(2j-1)^2) / (2^{2j} (2j+1)!) w^j
             + w^{(p-1)/2}
    """
    p = OddPrime.of(p)
    n = p.value
    coeffs = [Fraction(n)]
    for j in range(1, (n - 3) // 2 + 1):
        coeffs.append(Fraction(n * _odd_factor_product(n, j), 4**j * factorial(2 * j + 1)))
    coeffs.append(Fraction(1))
    return RatPoly(coeffs).to_int(f"f_{n}(w)")


@lru_cache(maxsize=None)
def ko_relation_expanded(p: OddPrime) -> IntPoly:
    """
    p w + sum_{j=2}^{(p-1)/2} p(p^2-1^2)...(p^2-(2j-3)^2) / (2^{2j-2} (2j-1)!) w^j
        + w^{(p+1)/2}

    cross-checked against w * f_p(w).
    """
    p = OddPrime.of(p)
    n = p.value
    coeffs = [Fraction(0), Fraction(n)]
    for j in range(2, (n - 1) // 2 + 1):
        coeffs.append(
            Fraction(n * _odd_factor_product(n, j - 1), 4 ** (j - 1) * factorial(2 * j - 1))
        )
    coeffs.append(Fraction(1))
    expanded = RatPoly(coeffs).to_int(f"KO relation for p={n}")
    product = f_polynomial(p).shift(1)
    if expanded != product:
        logging.error(f"KO relation mismatch for p={n}: {expanded} != {product}")
        raise ConsistencyViolation(
            f"expanded KO relation {expanded} differs from w*f_{n}(w) = {product}"
        )
    return expanded


@lru_cache(maxsize=None)
def real_denominator(p: OddPrime) -> IntPoly:
    """(w f_p(w) - w^{(p+1)/2}) / (p w)."""
    p = OddPrime.of(p)
    n = p.value
    rel = ko_relation_expanded(p)
    top = (n + 1) // 2
    return IntPoly(
        [exact_quotient(rel[j], n, f"KO coefficient of w^{j} over {n}") for j in range(1, top)]
    )


def relation_polynomial(theory: Theory, p: OddPrime) -> IntPoly:
    theory = Theory.parse(theory)
    return complex_relation(p) if theory is Theory.COMPLEX else ko_relation_expanded(p)


def denominator(theory: Theory, p: OddPrime) -> IntPoly:
    theory = Theory.parse(theory)
    return complex_denominator(p) if theory is Theory.COMPLEX else real_denominator(p)


def _negated_inverse(den: IntPoly, order: int) -> TruncatedSeries[int]:
    if order < 1:
        raise ValueError("series order must be >= 1")
    return -TruncatedSeries.from_poly(den, order, INTEGERS).inverse()


def k_series(p: OddPrime, order: int) -> TruncatedSeries[int]:
    """K_{p,0..order-1}: sum K_n mu^n = -p mu / ((1 + mu)^p - 1 - mu^p)."""
    return _negated_inverse(complex_denominator(OddPrime.of(p)), order)


def m_series(p: OddPrime, order: int) -> TruncatedSeries[int]:
    """M_{p,0..order-1}: sum M_n w^n = -p w / (w f_p(w) - w^{(p+1)/2})."""
    return _negated_inverse(real_denominator(OddPrime.of(p)), order)


def base_series(theory: Theory, p: OddPrime, order: int) -> TruncatedSeries[int]:
    theory = Theory.parse(theory)
    return k_series(p, order) if theory is Theory.COMPLEX else m_series(p, order)
