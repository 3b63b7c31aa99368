from __future__ import annotations

from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Generic, TypeVar

from .poly import PolynomialInP

T = TypeVar("T")


class CoefficientDomain(ABC, Generic[T]):
    """Exact commutative ring that a TruncatedSeries draws coefficients from."""

    name: str = ""

    @abstractmethod
    def coerce(self, value) -> T:
        pass

    @abstractmethod
    def zero(self) -> T:
        pass

    @abstractmethod
    def one(self) -> T:
        pass

    @abstractmethod
    def is_unit(self, a: T) -> bool:
        pass

    @abstractmethod
    def exact_div_by_unit(self, a: T, unit: T) -> T:
        pass

    def add(self, a: T, b: T) -> T:
        return a + b

    def neg(self, a: T) -> T:
        return -a

    def mul(self, a: T, b: T) -> T:
        return a * b

    def is_zero(self, a: T) -> bool:
        return not a

    def __repr__(self) -> str:
        return f"<{type(self).__name__}>"


class IntegerDomain(CoefficientDomain[int]):
    name = "integers"

    def coerce(self, value) -> int:
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise ValueError(f"{value} is not an integer")
            return value.numerator
        return int(value)

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1

    def is_unit(self, a: int) -> bool:
        return a in (1, -1)

    def exact_div_by_unit(self, a: int, unit: int) -> int:
        return a * unit


class RationalDomain(CoefficientDomain[Fraction]):
    name = "rationals"

    def coerce(self, value) -> Fraction:
        return value if isinstance(value, Fraction) else Fraction(value)

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def is_unit(self, a: Fraction) -> bool:
        return a != 0

    def exact_div_by_unit(self, a: Fraction, unit: Fraction) -> Fraction:
        return a / unit


class PolynomialInPDomain(CoefficientDomain[PolynomialInP]):
    """Q[p]; its units are the nonzero constants."""

    name = "polynomials in p"

    def coerce(self, value) -> PolynomialInP:
        if isinstance(value, PolynomialInP):
            return value
        if isinstance(value, (int, Fraction)):
            return PolynomialInP([value])
        return PolynomialInP(value.coeffs)

    def zero(self) -> PolynomialInP:
        return PolynomialInP([])

    def one(self) -> PolynomialInP:
        return PolynomialInP([1])

    def is_unit(self, a: PolynomialInP) -> bool:
        return a.degree == 0

    def exact_div_by_unit(self, a: PolynomialInP, unit: PolynomialInP) -> PolynomialInP:
        return a.scale(1 / unit[0])


INTEGERS = IntegerDomain()
RATIONALS = RationalDomain()
POLYNOMIALS_IN_P = PolynomialInPDomain()
