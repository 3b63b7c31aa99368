from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from sympy import isprime

from src.configs.config import PRIMALITY_CEILING
from src.errors import IntegralityViolation, InvalidPrime, PrimalityUndecided

ExactInt = int
ExactRat = Fraction


def is_odd_prime(n: int) -> bool:
    """
    True iff n is an odd prime.

    sympy's test is a proof (not a probable-prime answer) below 2**64; larger
    inputs are refused rather than answered probabilistically.
    """
    if n < 3 or n % 2 == 0:
        return False
    if n >= PRIMALITY_CEILING:
        raise PrimalityUndecided(
            f"{n} is above the deterministic primality ceiling {PRIMALITY_CEILING}"
        )
    return bool(isprime(n))


@dataclass(frozen=True, order=True)
class OddPrime:
    value: int

    def __post_init__(self):
        if not isinstance(self.value, int) or isinstance(self.value, bool):
            raise InvalidPrime(self.value)
        if not is_odd_prime(self.value):
            raise InvalidPrime(self.value)

    @classmethod
    def of(cls, value) -> "OddPrime":
        if isinstance(value, OddPrime):
            return value
        try:
            as_int = int(value)
        except (TypeError, ValueError):
            raise InvalidPrime(value) from None
        if isinstance(value, float) or str(as_int) != str(value).strip():
            raise InvalidPrime(value)
        return cls(as_int)

    @property
    def half(self) -> int:
        """(p-1)/2, the bound of the balanced band."""
        return (self.value - 1) // 2

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)


def balanced_residue(c: int, p: OddPrime | int) -> tuple[int, int]:
    """Split c = r + p*q with -(p-1)/2 <= r <= (p-1)/2."""
    modulus = int(p)
    half = (modulus - 1) // 2
    q, r = divmod(c + half, modulus)
    return r - half, q


def binomial(n: int, k: int) -> int:
    if k < 0:
        raise ValueError("k must be >= 0")
    if n >= 0:
        return comb(n, k)
    # upper negation: C(n, k) = (-1)^k C(k - n - 1, k)
    return (-1) ** k * comb(k - n - 1, k)


def exact_quotient(numerator: int, divisor: int, context: str = "") -> int:
    q, r = divmod(numerator, divisor)
    if r:
        raise IntegralityViolation(
            f"{numerator}/{divisor} is not an integer{': ' + context if context else ''}"
        )
    return q


def as_integer(value: Fraction | int, context: str = "") -> int:
    value = Fraction(value)
    if value.denominator != 1:
        raise IntegralityViolation(
            f"{value} is not an integer{': ' + context if context else ''}"
        )
    return value.numerator
