"""Exact rational arithmetic and univariate polynomial algebra."""

from seqformula.algebra.factor import (
    DegreeCapExceeded,
    Factorization,
    integer_roots,
    poly_factor,
    poly_rational_roots,
    poly_resultant,
)
from seqformula.algebra.linalg import nullspace, rref, solve_linear
from seqformula.algebra.poly import (
    AlgebraError,
    Poly,
    RatFun,
    echelon_polys,
    falling_factorial,
    poly_divrem,
    poly_gcd,
    poly_gcd_many,
    poly_shift,
    ratfun_normalize,
    ratfun_translate,
)

__all__ = [
    "AlgebraError",
    "DegreeCapExceeded",
    "Factorization",
    "Poly",
    "RatFun",
    "echelon_polys",
    "falling_factorial",
    "integer_roots",
    "nullspace",
    "poly_divrem",
    "poly_factor",
    "poly_gcd",
    "poly_gcd_many",
    "poly_rational_roots",
    "poly_resultant",
    "poly_shift",
    "ratfun_normalize",
    "ratfun_translate",
    "rref",
    "solve_linear",
]
