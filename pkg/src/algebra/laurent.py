from __future__ import annotations

from typing import Iterable

from .poly import IntPoly, format_poly


class LaurentIntPoly:
    """Integer Laurent polynomial sum(c_i * x**(min_exponent + i))."""

    __slots__ = ("_min", "_coeffs")

    def __init__(self, min_exponent: int, coeffs: Iterable[int]):
        values = [int(c) for c in coeffs]
        start = 0
        while start < len(values) and not values[start]:
            start += 1
        values = values[start:]
        while values and not values[-1]:
            values.pop()
        self._min = min_exponent + start if values else 0
        self._coeffs = tuple(values)

    @classmethod
    def from_poly(cls, poly: IntPoly, shift: int = 0) -> "LaurentIntPoly":
        return cls(shift, poly.coeffs)

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentIntPoly":
        return cls(exponent, [coeff])

    @property
    def min_exponent(self) -> int:
        return self._min

    @property
    def max_exponent(self) -> int:
        return self._min + len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, exponent: int) -> int:
        i = exponent - self._min
        return self._coeffs[i] if 0 <= i < len(self._coeffs) else 0

    def terms(self) -> list[tuple[int, int]]:
        return [(self._min + i, c) for i, c in enumerate(self._coeffs) if c]

    def to_poly(self) -> tuple[IntPoly, int]:
        """Split self as x**shift * poly with poly(0) != 0."""
        return IntPoly(self._coeffs), self._min

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentIntPoly):
            return NotImplemented
        return self._min == other._min and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._min, self._coeffs))

    def __add__(self, other: "LaurentIntPoly") -> "LaurentIntPoly":
        if isinstance(other, int):
            other = LaurentIntPoly(0, [other])
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self._min, other._min)
        hi = max(self.max_exponent, other.max_exponent)
        out = [0] * (hi - lo + 1)
        for poly in (self, other):
            offset = poly._min - lo
            for i, c in enumerate(poly._coeffs):
                out[offset + i] += c
        return LaurentIntPoly(lo, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentIntPoly":
        return LaurentIntPoly(self._min, [-c for c in self._coeffs])

    def __sub__(self, other: "LaurentIntPoly") -> "LaurentIntPoly":
        if isinstance(other, int):
            other = LaurentIntPoly(0, [other])
        return self + (-other)

    def __mul__(self, other) -> "LaurentIntPoly":
        if isinstance(other, int):
            return LaurentIntPoly(self._min, [other * c for c in self._coeffs])
        if not isinstance(other, LaurentIntPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return LaurentIntPoly(0, [])
        out = [0] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if not a:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return LaurentIntPoly(self._min + other._min, out)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"LaurentIntPoly({self._min}, {list(self._coeffs)!r})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        body = format_poly(self._coeffs, "x")
        return body if self._min == 0 else f"x^{self._min}*({body})"


# w = x + x^-1 - 2 = x^-1 (1 - 2x + x^2)
REALIFICATION_W = LaurentIntPoly(-1, [1, -2, 1])


def laurent_substitute_w(f_in_w: IntPoly) -> LaurentIntPoly:
    """Evaluate f at w = x + 1/x - 2."""
    acc = LaurentIntPoly(0, [])
    for c in reversed(f_in_w.coeffs):
        acc = acc * REALIFICATION_W + c
    return acc
