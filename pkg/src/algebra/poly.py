from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from src.errors import IntegralityViolation, NonMonicDivisor


class DensePoly:
    """
    Immutable dense univariate polynomial, coefficients stored low-to-high.

    The highest stored coefficient is nonzero unless the polynomial is zero,
    in which case nothing is stored. Subclasses fix the coefficient ring by
    overriding ``_coerce``.
    """

    symbol = "x"
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        values = [self._coerce(c) for c in coeffs]
        while values and not values[-1]:
            values.pop()
        self._coeffs = tuple(values)

    @staticmethod
    def _coerce(c):
        return c

    @classmethod
    def _wrap(cls, coeffs):
        return cls(coeffs)

    @classmethod
    def monomial(cls, degree: int, coeff=1):
        return cls([0] * degree + [coeff])

    @classmethod
    def x(cls):
        return cls.monomial(1)

    @classmethod
    def constant(cls, c):
        return cls([c])

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def leading(self):
        return self._coeffs[-1] if self._coeffs else self._coerce(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_monic(self) -> bool:
        return bool(self._coeffs) and self._coeffs[-1] == 1

    def __getitem__(self, k: int):
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return self._coerce(0)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, DensePoly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self) -> int:
        return hash((DensePoly, self._coeffs))

    def _lift(self, other):
        if isinstance(other, DensePoly):
            return other
        if isinstance(other, (int, Fraction)):
            return self._wrap([other])
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return self._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return self._wrap([-c for c in self._coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, DensePoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return self._wrap([])
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return self._wrap(out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = self._wrap([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c):
        return self._wrap([c * v for v in self._coeffs])

    def shift(self, k: int):
        """Multiply by symbol**k."""
        if not self._coeffs:
            return self
        return self._wrap([0] * k + list(self._coeffs))

    def evaluate(self, value):
        acc = self._coerce(0) if not isinstance(value, DensePoly) else value._wrap([])
        for c in reversed(self._coeffs):
            acc = acc * value + c
        return acc

    __call__ = evaluate

    def truncate(self, n: int):
        return self._wrap(self._coeffs[:n])

    def divrem_monic(self, divisor: "DensePoly"):
        return poly_divrem_monic(self, divisor)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self._coeffs)!r})"

    def __str__(self) -> str:
        return format_poly(self._coeffs, self.symbol)


class IntPoly(DensePoly):
    __slots__ = ()

    @staticmethod
    def _coerce(c):
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise IntegralityViolation(f"{c} is not an integer coefficient")
            return c.numerator
        if isinstance(c, bool) or not isinstance(c, int):
            return int(c)
        return c

    def content(self) -> int:
        g = 0
        for c in self._coeffs:
            g = gcd(g, c)
        return g


class RatPoly(DensePoly):
    __slots__ = ()

    @staticmethod
    def _coerce(c):
        return c if isinstance(c, Fraction) else Fraction(c)

    def to_int(self, context: str = "") -> IntPoly:
        for c in self._coeffs:
            if c.denominator != 1:
                raise IntegralityViolation(
                    f"coefficient {c} of {self} is not an integer"
                    + (f" ({context})" if context else "")
                )
        return IntPoly(c.numerator for c in self._coeffs)

    def content(self) -> Fraction:
        """Positive rational c with self/c primitive in Z[x]."""
        if not self._coeffs:
            return Fraction(0)
        num = 0
        den = 1
        for c in self._coeffs:
            num = gcd(num, c.numerator)
            den = lcm(den, c.denominator)
        return Fraction(num, den)


class PolynomialInP(RatPoly):
    """Element of Q[p]."""

    symbol = "p"
    __slots__ = ()

    @classmethod
    def p(cls) -> "PolynomialInP":
        return cls.x()

    def at(self, p: int) -> Fraction:
        return self.evaluate(Fraction(p))


def poly_add(a: DensePoly, b: DensePoly) -> DensePoly:
    return a + b


def poly_mul(a: DensePoly, b: DensePoly) -> DensePoly:
    return a * b


def poly_scale(a: DensePoly, c) -> DensePoly:
    return a.scale(c)


def poly_divrem_monic(dividend: DensePoly, divisor: DensePoly):
    """Quotient and remainder of exact division by a monic polynomial."""
    if divisor.is_zero() or divisor.leading != 1:
        raise NonMonicDivisor(f"divisor {divisor} is not monic")
    rem = list(dividend.coeffs)
    d = divisor.degree
    if len(rem) <= d:
        return dividend._wrap([]), dividend._wrap(rem)
    dc = divisor.coeffs
    quot = [0] * (len(rem) - d)
    for i in range(len(rem) - 1, d - 1, -1):
        c = rem[i]
        if not c:
            continue
        k = i - d
        quot[k] = c
        for j in range(d + 1):
            if dc[j]:
                rem[k + j] -= c * dc[j]
    return dividend._wrap(quot), dividend._wrap(rem[:d])


def format_poly(coeffs: Sequence, symbol: str = "x") -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if k == 0:
            body = str(mag)
        else:
            power = symbol if k == 1 else f"{symbol}^{k}"
            body = power if mag == 1 else f"{mag}*{power}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first_body = terms[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out
