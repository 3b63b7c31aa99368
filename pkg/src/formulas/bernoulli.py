from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .symbolic import k_formula


@dataclass(frozen=True)
class BernoulliValue:
    n: int
    value: Fraction


@lru_cache(maxsize=None)
def _bernoulli_table(n: int) -> tuple:
    """B_0..B_n from sum_{k=0}^{m} C(m+1, k) B_k = 0, so B_1 = -1/2."""
    table = [Fraction(1)]
    for m in range(1, n + 1):
        acc = sum(comb(m + 1, k) * table[k] for k in range(m))
        table.append(-acc / (m + 1))
    return tuple(table)


def bernoulli_oracle(n: int) -> BernoulliValue:
    if n < 0:
        raise ValueError("n must be >= 0")
    return BernoulliValue(n, _bernoulli_table(n)[n])


def bernoulli_from_k(n: int) -> BernoulliValue:
    """B_n = lim -n! K_n / p^n, i.e. -n! times the p^n coefficient of K_n(p)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    leading = k_formula(n).formula[n]
    return BernoulliValue(n, -factorial(n) * leading)
