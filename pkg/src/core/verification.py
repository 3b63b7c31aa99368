from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterable

from src.algebra import IntPoly, LaurentIntPoly, laurent_substitute_w, poly_divrem_monic
from src.arith import OddPrime

from .reduction import complete_reduce, reduction_snapshot
from .relations import (Theory, base_series, denominator, f_polynomial,
                        relation_polynomial)


def _term_poly(terms: Iterable[tuple[int, int]]) -> IntPoly:
    coeffs: dict[int, int] = {}
    for exponent, coeff in terms:
        exponent = int(exponent)
        if exponent < 0:
            raise ValueError(f"negative exponent {exponent} in term list")
        if exponent in coeffs:
            raise ValueError(f"exponent {exponent} appears twice in term list")
        coeffs[exponent] = int(coeff)
    if not coeffs:
        return IntPoly([])
    dense = [0] * (max(coeffs) + 1)
    for exponent, coeff in coeffs.items():
        dense[exponent] = coeff
    return IntPoly(dense)


def is_in_relation_ideal(theory: Theory, p: OddPrime, poly: IntPoly) -> bool:
    _, remainder = poly_divrem_monic(poly, relation_polynomial(theory, p))
    return remainder.is_zero()


def verify_finite_identity(
    theory: Theory, p: OddPrime, terms: Iterable[tuple[int, int]]
) -> bool:
    """True iff p*X - sum(coeff * X^exponent) lies in the relation ideal."""
    p = OddPrime.of(p)
    lhs = IntPoly([0, p.value])
    return is_in_relation_ideal(theory, p, lhs - _term_poly(terms))


def series_inverts_denominator(theory: Theory, p: OddPrime, order: int) -> bool:
    """True iff D * (base series to order) = -1 mod X^order."""
    dq = denominator(theory, p) * IntPoly(base_series(theory, p, order).to_list())
    return dq[0] == -1 and not any(dq[k] for k in range(1, order))


def reduction_prefix_is_exact(theory: Theory, p: OddPrime, order: int) -> bool:
    """
    The first ``order`` balanced coefficients open an exact finite identity:
    the untruncated snapshot agrees with them and lies in the relation ideal.
    Balanced expansions are unique, so no other prefix of that length can.
    """
    prefix = complete_reduce(theory, p, order).balanced
    snapshot = reduction_snapshot(theory, p, order)
    return snapshot.balanced == prefix and verify_finite_identity(theory, p, snapshot.terms())


def prefix_congruence_check(theory: Theory, p: OddPrime) -> bool:
    """
    The first p+1 (complex) or (p+1)/2 (real) balanced coefficients are the
    K_n (resp. M_n) reduced mod p.
    """
    theory = Theory.parse(theory)
    p = OddPrime.of(p)
    count = p.value + 1 if theory is Theory.COMPLEX else (p.value + 1) // 2
    reduced = complete_reduce(theory, p, count).balanced
    series = base_series(theory, p, count)
    mismatches = [n for n in range(count) if (reduced[n] - series[n]) % p.value]
    if mismatches:
        logging.warning(
            f"Prefix congruence fails for {theory.value} p={p} at positions {mismatches}"
        )
    return not mismatches


@dataclass(frozen=True)
class PeriodCertificate:
    """Claim p*X = sum P_n X^(e+n) + X^(e+s) * C(X) / (1 - X^t)."""

    theory: Theory
    p: OddPrime
    preperiod: tuple
    cycle: tuple
    verified: bool = False

    def certified(self) -> "PeriodCertificate":
        return replace(self, verified=certify_period(self))


def certify_period(cert: PeriodCertificate) -> bool:
    theory = Theory.parse(cert.theory)
    p = OddPrime.of(cert.p)
    s, t = len(cert.preperiod), len(cert.cycle)
    if t < 1:
        raise ValueError("a period certificate needs a cycle of length >= 1")
    if any(abs(c) > p.half for c in (*cert.preperiod, *cert.cycle)):
        raise ValueError("certificate entries must lie in the balanced band")
    e = theory.base_exponent(p)
    one_minus = IntPoly([1]) - IntPoly.monomial(t)
    prefix = IntPoly([0] * e + list(cert.preperiod))
    cycle = IntPoly([0] * (e + s) + list(cert.cycle))
    q = IntPoly([0, p.value]) * one_minus - one_minus * prefix - cycle
    return is_in_relation_ideal(theory, p, q)


class RealificationStatus(str, Enum):
    CLOSED_FORM = "CLOSED_FORM"
    DIVISIBLE_ONLY = "DIVISIBLE_ONLY"
    FAILED = "FAILED"


def realification_target(p: OddPrime) -> LaurentIntPoly:
    """x^{-(p+1)/2} (x - 1)(x^p - 1)."""
    p = OddPrime.of(p)
    n = p.value
    body = IntPoly([-1, 1]) * (IntPoly.monomial(n) - 1)
    return LaurentIntPoly.from_poly(body, -((n + 1) // 2))


def realification_status(p: OddPrime) -> RealificationStatus:
    p = OddPrime.of(p)
    substituted = laurent_substitute_w(f_polynomial(p).shift(1))
    if substituted == realification_target(p):
        return RealificationStatus.CLOSED_FORM
    poly, _ = substituted.to_poly()
    _, remainder = poly_divrem_monic(poly, IntPoly.monomial(p.value) - 1)
    if remainder.is_zero():
        logging.warning(f"Realification of p={p} is divisible by x^p - 1 but not in closed form")
        return RealificationStatus.DIVISIBLE_ONLY
    logging.error(f"Realification of p={p} is not divisible by x^p - 1")
    return RealificationStatus.FAILED


def realification_check(p: OddPrime) -> bool:
    return realification_status(p) is RealificationStatus.CLOSED_FORM
