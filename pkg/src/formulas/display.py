from __future__ import annotations

from src.algebra import IntPoly, PolynomialInP, poly_divrem_monic

# Factors the K_n / M_n tables are usually written with, tried in this order.
_DISPLAY_FACTORS = (
    (IntPoly([-1, 0, 1]), "p^2-1"),
    (IntPoly([-1, 1]), "p-1"),
    (IntPoly([-9, 0, 1]), "p^2-9"),
)


def compact(poly: IntPoly, symbol: str = "p") -> str:
    parts = []
    for k in range(poly.degree, -1, -1):
        c = poly[k]
        if not c:
            continue
        power = "" if k == 0 else (symbol if k == 1 else f"{symbol}^{k}")
        mag = abs(c)
        body = str(mag) if not power else (power if mag == 1 else f"{mag}{power}")
        sign = "-" if c < 0 else ("+" if parts else "")
        parts.append(sign + body)
    return "".join(parts) or "0"


def factored(poly: PolynomialInP) -> str:
    """Human-oriented factored form, e.g. -(p^2-1)(7p^2+17)/5760. Display only."""
    if poly.is_zero():
        return "0"
    content = poly.content()
    sign = -1 if poly.leading < 0 else 1
    rest = poly.scale(sign / content).to_int("primitive part")
    factors = []
    for divisor, label in _DISPLAY_FACTORS:
        while rest.degree >= divisor.degree:
            quotient, remainder = poly_divrem_monic(rest, divisor)
            if not remainder.is_zero():
                break
            factors.append(f"({label})")
            rest = quotient
    if rest != 1:
        factors.append(f"({compact(rest)})" if factors or content.numerator != 1 else compact(rest))
    numerator = "".join(factors)
    if content.numerator != 1 or not numerator:
        numerator = f"{content.numerator}{numerator}"
    if content.denominator != 1 and not numerator.startswith("(") and not numerator.isdigit():
        numerator = f"({numerator})"
    out = ("-" if sign < 0 else "") + numerator
    if content.denominator != 1:
        out += f"/{content.denominator}"
    return out
