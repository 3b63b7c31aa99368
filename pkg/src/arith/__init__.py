from .exact import (ExactInt, ExactRat, OddPrime, as_integer, balanced_residue,
                    binomial, exact_quotient, is_odd_prime)

__all__ = [
    "ExactInt",
    "ExactRat",
    "OddPrime",
    "as_integer",
    "balanced_residue",
    "binomial",
    "exact_quotient",
    "is_odd_prime",
]
