from .bernoulli import BernoulliValue, bernoulli_from_k, bernoulli_oracle
from .display import compact, factored
from .symbolic import (FormulaCheck, FormulaEntry, ScanSummary, TableCheck,
                       binomial_in_p, direct_disagreements, formula,
                       formula_residues, formula_vs_direct_scan,
                       generic_denominator, k_formula, m_formula,
                       paper_formulas, paper_table_check, parse_formula)

__all__ = [
    "BernoulliValue",
    "FormulaCheck",
    "FormulaEntry",
    "ScanSummary",
    "TableCheck",
    "bernoulli_from_k",
    "bernoulli_oracle",
    "binomial_in_p",
    "compact",
    "direct_disagreements",
    "factored",
    "formula",
    "formula_residues",
    "formula_vs_direct_scan",
    "generic_denominator",
    "k_formula",
    "m_formula",
    "paper_formulas",
    "paper_table_check",
    "parse_formula",
]
