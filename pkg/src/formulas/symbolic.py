from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Optional

import sympy

from src.algebra import POLYNOMIALS_IN_P, PolynomialInP, TruncatedSeries
from src.arith import OddPrime, balanced_residue
from src.core import Theory, base_series
from src.utils.helper import load_reference

from .display import factored

P = PolynomialInP.p()


@dataclass(frozen=True)
class FormulaEntry:
    theory: Theory
    n: int
    formula: PolynomialInP
    min_valid_p: int

    def at(self, p: int) -> Fraction:
        return self.formula.at(p)

    def applies_to(self, p: int) -> bool:
        return int(p) >= self.min_valid_p

    def display(self) -> str:
        return factored(self.formula)


def binomial_in_p(k: int) -> PolynomialInP:
    """p(p-1)...(p-k+1)/k! as an element of Q[p]."""
    if k < 1:
        raise ValueError("k must be >= 1")
    out = PolynomialInP([1])
    for i in range(k):
        out = out * (P - i)
    return out.scale(Fraction(1, factorial(k)))


def _over_p(poly: PolynomialInP) -> PolynomialInP:
    if poly[0] != 0:
        raise ValueError(f"{poly} is not divisible by p")
    return PolynomialInP(poly.coeffs[1:])


def _ko_coefficient(j: int) -> PolynomialInP:
    """(p^2-1)(p^2-9)...(p^2-(2j-3)^2) / (2^{2j-2} (2j-1)!)."""
    out = PolynomialInP([1])
    for i in range(1, j):
        out = out * (P * P - (2 * i - 1) ** 2)
    return out.scale(Fraction(1, 4 ** (j - 1) * factorial(2 * j - 1)))


def generic_denominator(theory: Theory, order: int, terms: Optional[int] = None) -> TruncatedSeries:
    """
    Denominator series over Q[p] valid for every large p. ``terms`` is the
    largest index k (complex) or j (real) kept in the sum; default order.
    """
    theory = Theory.parse(theory)
    last = order if terms is None else terms
    coeffs = [PolynomialInP([1])]
    for idx in range(2, last + 1):
        if theory is Theory.COMPLEX:
            coeffs.append(_over_p(binomial_in_p(idx)))
        else:
            coeffs.append(_ko_coefficient(idx))
    return TruncatedSeries.of(coeffs, POLYNOMIALS_IN_P, order)


@lru_cache(maxsize=None)
def _formula(theory: Theory, n: int, order: int, terms: int) -> PolynomialInP:
    inverse = generic_denominator(theory, order, terms).inverse()
    return -inverse[n]


def formula(
    theory: Theory, n: int, order: Optional[int] = None, terms: Optional[int] = None
) -> FormulaEntry:
    theory = Theory.parse(theory)
    if n < 0:
        raise ValueError("n must be >= 0")
    order = n + 1 if order is None else order
    terms = n + 1 if terms is None else terms
    if order <= n:
        raise ValueError(f"series order {order} does not reach coefficient {n}")
    poly = _formula(theory, n, order, terms)
    if theory is Theory.COMPLEX:
        min_valid = 3 if n == 0 else n + 2
    else:
        min_valid = 2 * n + 3
    return FormulaEntry(theory, n, poly, min_valid)


def k_formula(n: int, order: Optional[int] = None, terms: Optional[int] = None) -> FormulaEntry:
    return formula(Theory.COMPLEX, n, order, terms)


def m_formula(n: int, order: Optional[int] = None, terms: Optional[int] = None) -> FormulaEntry:
    return formula(Theory.REAL, n, order, terms)


def parse_formula(text: str) -> PolynomialInP:
    """Expand a transcribed formula in the symbol p with sympy."""
    p = sympy.Symbol("p")
    expr = sympy.sympify(text, locals={"p": p})
    coeffs = sympy.Poly(sympy.expand(expr), p).all_coeffs()
    return PolynomialInP(Fraction(int(c.p), int(c.q)) for c in reversed(coeffs))


def paper_formulas(theory: Theory) -> dict[int, FormulaEntry]:
    theory = Theory.parse(theory)
    table = load_reference("paper_data")["formulas"][theory.value]
    return {
        int(n): FormulaEntry(theory, int(n), parse_formula(row["text"]), int(row["min_valid_p"]))
        for n, row in table.items()
    }


@dataclass(frozen=True)
class TableCheck:
    theory: Theory
    n: int
    paper: FormulaEntry
    computed: FormulaEntry

    @property
    def match(self) -> bool:
        return self.paper.formula == self.computed.formula

    @property
    def status(self) -> str:
        return "MATCH" if self.match else "MISMATCH"


def paper_table_check() -> list[TableCheck]:
    checks = []
    for theory in (Theory.COMPLEX, Theory.REAL):
        for n, entry in sorted(paper_formulas(theory).items()):
            check = TableCheck(theory, n, entry, formula(theory, n))
            if not check.match:
                logging.warning(
                    f"{theory.value} formula n={n} differs: paper {entry.formula}, computed {check.computed.formula}"
                )
            checks.append(check)
    return checks


def direct_disagreements(theory: Theory, entry: FormulaEntry, p_max: int) -> list[int]:
    """Odd primes p <= p_max in the valid range of entry where it differs from the direct series."""
    theory = Theory.parse(theory)
    primes = [p for p in map(int, sympy.primerange(3, p_max + 1)) if entry.applies_to(p)]
    return [p for p in primes if entry.at(p) != base_series(theory, p, entry.n + 1)[entry.n]]


@dataclass(frozen=True)
class FormulaCheck:
    n: int
    p: int
    formula_value: Fraction
    direct_value: int
    in_range: bool

    @property
    def status(self) -> str:
        if not self.in_range:
            return "BELOW_THRESHOLD"
        return "MATCH" if self.formula_value == self.direct_value else "MISMATCH"


@dataclass
class ScanSummary:
    theory: Theory
    n_max: int
    p_max: int
    checks: list[FormulaCheck] = field(default_factory=list)

    @property
    def in_range(self) -> list[FormulaCheck]:
        return [c for c in self.checks if c.in_range]

    @property
    def below_threshold(self) -> list[FormulaCheck]:
        return [c for c in self.checks if not c.in_range]

    @property
    def passed(self) -> bool:
        return all(c.status == "MATCH" for c in self.in_range)


def formula_vs_direct_scan(theory: Theory, n_max: int, p_max: int) -> ScanSummary:
    """Evaluate formula(n) at every odd prime p <= p_max against the direct series."""
    theory = Theory.parse(theory)
    entries = [formula(theory, n) for n in range(n_max + 1)]
    summary = ScanSummary(theory, n_max, p_max)
    for p in map(int, sympy.primerange(3, p_max + 1)):
        direct = base_series(theory, p, n_max + 1)
        for entry in entries:
            summary.checks.append(
                FormulaCheck(entry.n, p, entry.at(p), direct[entry.n], entry.applies_to(p))
            )
    failures = [c for c in summary.in_range if c.status != "MATCH"]
    if failures:
        logging.error(f"{len(failures)} formula/direct mismatches in {theory.value} scan")
    return summary


def formula_residues(theory: Theory, p: OddPrime, n_max: int) -> list[dict]:
    """Balanced residues of the tabulated formulas next to the direct series residues."""
    theory = Theory.parse(theory)
    p = OddPrime.of(p)
    direct = base_series(theory, p, n_max + 1)
    rows = []
    for n in range(n_max + 1):
        entry = formula(theory, n)
        row = {"n": n, "direct": direct[n], "direct_residue": balanced_residue(direct[n], p)[0]}
        if entry.applies_to(p.value):
            value = entry.at(p.value)
            row["formula"] = value.numerator
            row["formula_residue"] = balanced_residue(value.numerator, p)[0]
        rows.append(row)
    return rows
