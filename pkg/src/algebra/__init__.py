from .domains import (INTEGERS, POLYNOMIALS_IN_P, RATIONALS, CoefficientDomain,
                      IntegerDomain, PolynomialInPDomain, RationalDomain)
from .laurent import REALIFICATION_W, LaurentIntPoly, laurent_substitute_w
from .poly import (DensePoly, IntPoly, PolynomialInP, RatPoly, poly_add,
                   poly_divrem_monic, poly_mul, poly_scale)
from .series import (TruncatedSeries, series_add, series_inverse, series_mul,
                     series_shift)

__all__ = [
    "INTEGERS",
    "POLYNOMIALS_IN_P",
    "RATIONALS",
    "CoefficientDomain",
    "DensePoly",
    "IntPoly",
    "IntegerDomain",
    "LaurentIntPoly",
    "PolynomialInP",
    "PolynomialInPDomain",
    "REALIFICATION_W",
    "RatPoly",
    "RationalDomain",
    "TruncatedSeries",
    "laurent_substitute_w",
    "poly_add",
    "poly_divrem_monic",
    "poly_mul",
    "poly_scale",
    "series_add",
    "series_inverse",
    "series_mul",
    "series_shift",
]
