from fractions import Fraction

import pytest
import sympy

from src.core import Theory, k_series
from src.formulas import (bernoulli_from_k, bernoulli_oracle, binomial_in_p,
                          direct_disagreements, factored, formula,
                          formula_residues, formula_vs_direct_scan, k_formula,
                          m_formula, paper_formulas, paper_table_check,
                          parse_formula)
from src.algebra import PolynomialInP

P = PolynomialInP.p()


def test_binomial_in_p():
    assert binomial_in_p(1) == P
    assert binomial_in_p(2) == (P * P - P).scale(Fraction(1, 2))
    assert binomial_in_p(3).at(7) == 35
    with pytest.raises(ValueError):
        binomial_in_p(0)


@pytest.mark.parametrize(
    "n, text",
    [(0, "-1"), (1, "(p - 1)/2"), (2, "-(p**2 - 1)/12"), (4, "(p**2 - 1)*(p**2 - 19)/720")],
)
def test_k_formula(n, text):
    assert k_formula(n).formula == parse_formula(text)


@pytest.mark.parametrize(
    "n, text", [(0, "-1"), (1, "(p**2 - 1)/24"), (2, "-(p**2 - 1)*(7*p**2 + 17)/5760")]
)
def test_m_formula(n, text):
    assert m_formula(n).formula == parse_formula(text)


def test_min_valid_p():
    assert [k_formula(n).min_valid_p for n in range(7)] == [3, 3, 4, 5, 6, 7, 8]
    assert [m_formula(n).min_valid_p for n in range(4)] == [3, 5, 7, 9]


def test_formula_rejects_negative_index():
    with pytest.raises(ValueError):
        k_formula(-1)


def test_formula_independent_of_order_and_truncation():
    for n in range(6):
        assert k_formula(n, order=n + 5, terms=n + 7).formula == k_formula(n).formula
        assert m_formula(n, order=n + 3, terms=n + 4).formula == m_formula(n).formula


def test_published_tables():
    checks = {(c.theory, c.n): c for c in paper_table_check()}
    assert len(checks) == 9
    assert set(paper_formulas(Theory.COMPLEX)) == {1, 2, 3, 4, 5, 6}
    mismatched = {key for key, check in checks.items() if check.status == "MISMATCH"}
    assert mismatched == {(Theory.COMPLEX, 6), (Theory.REAL, 3)}


@pytest.mark.parametrize("theory, n", [(Theory.COMPLEX, 6), (Theory.REAL, 3)])
def test_mismatched_published_formulas_disagree_with_the_series(theory, n):
    published = paper_formulas(theory)[n]
    in_range = [int(p) for p in sympy.primerange(11, 102)]
    assert direct_disagreements(theory, published, 101) == in_range
    assert direct_disagreements(theory, formula(theory, n), 101) == []


def test_published_formulas_that_match_agree_with_the_series():
    for theory in Theory:
        for n, entry in paper_formulas(theory).items():
            if entry.formula == formula(theory, n).formula:
                assert direct_disagreements(theory, entry, 61) == []


def test_formula_values_at_23():
    assert k_formula(6).at(23) == -4224 == k_series(23, 7)[6]
    assert m_formula(3).at(23) == 4785
    assert paper_formulas(Theory.COMPLEX)[6].at(23) == -10494
    assert paper_formulas(Theory.REAL)[3].at(23) == 26081


@pytest.mark.parametrize("theory, n_max", [(Theory.COMPLEX, 6), (Theory.REAL, 3)])
def test_formula_vs_direct_scan(theory, n_max):
    summary = formula_vs_direct_scan(theory, n_max, 101)
    assert summary.passed
    assert summary.in_range
    assert all(Fraction(c.formula_value).denominator == 1 for c in summary.in_range)


def test_below_threshold_is_flagged_not_asserted():
    entry = k_formula(4)
    assert entry.at(5) == Fraction(1, 5)
    assert not entry.applies_to(5)
    assert k_series(5, 5)[4] == 0
    summary = formula_vs_direct_scan(Theory.COMPLEX, 4, 5)
    check = next(c for c in summary.checks if (c.n, c.p) == (4, 5))
    assert check.status == "BELOW_THRESHOLD"
    assert check in summary.below_threshold


def test_evaluation_denominator_divides_content():
    for n in range(1, 7):
        poly = k_formula(n).formula
        den = poly.content().denominator
        for value in range(-5, 30):
            assert den % poly.at(value).denominator == 0


def test_formula_residues_agree_in_range():
    rows = formula_residues(Theory.COMPLEX, 7, 6)
    for row in rows:
        if "formula" in row:
            assert row["formula"] == row["direct"]
            assert row["formula_residue"] == row["direct_residue"]
    assert "formula" not in rows[6]
    assert rows[2]["direct"] == -4 and rows[2]["direct_residue"] == 3


@pytest.mark.parametrize(
    "theory, n, shown",
    [
        (Theory.COMPLEX, 0, "-1"),
        (Theory.COMPLEX, 1, "(p-1)/2"),
        (Theory.COMPLEX, 2, "-(p^2-1)/12"),
        (Theory.COMPLEX, 4, "(p^2-1)(p^2-19)/720"),
        (Theory.COMPLEX, 5, "-(p^2-1)(p^2-9)/480"),
        (Theory.REAL, 2, "-(p^2-1)(7p^2+17)/5760"),
    ],
)
def test_factored_display(theory, n, shown):
    assert formula(theory, n).display() == shown


def test_factored_display_edge_cases():
    assert factored(PolynomialInP([])) == "0"
    assert factored(PolynomialInP([1, 1]).scale(Fraction(1, 2))) == "(p+1)/2"
    assert factored(PolynomialInP([3])) == "3"
    assert paper_formulas(Theory.COMPLEX)[6].display() == (
        "-(p-1)(2p^5+122p^4-1825p^3+8375p^2-17617p+15263)/60480"
    )


def test_bernoulli_oracle():
    assert bernoulli_oracle(0).value == 1
    assert bernoulli_oracle(1).value == Fraction(-1, 2)
    assert bernoulli_oracle(5).value == 0
    assert bernoulli_oracle(6).value == Fraction(1, 42)
    with pytest.raises(ValueError):
        bernoulli_oracle(-1)


@pytest.mark.parametrize("n", range(1, 13))
def test_bernoulli_from_k_matches_oracle(n):
    assert bernoulli_from_k(n).value == bernoulli_oracle(n).value
    if n % 2 == 0:
        assert bernoulli_oracle(n).value == Fraction(str(sympy.bernoulli(n)))


@pytest.mark.parametrize("n, value", [(2, Fraction(1, 6)), (4, Fraction(-1, 30)), (3, 0)])
def test_bernoulli_examples(n, value):
    assert bernoulli_from_k(n).value == value


def test_degree_pattern():
    for n in range(1, 13):
        degree = k_formula(n).formula.degree
        assert degree <= n
        if n >= 3 and n % 2 == 1:
            assert degree < n
        if n % 2 == 0:
            assert degree == n
