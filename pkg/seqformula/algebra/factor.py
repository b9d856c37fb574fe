"""Factorization over the rationals and resultants, backed by sympy."""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

import sympy

from seqformula.algebra.poly import AlgebraError, Poly

DEFAULT_FACTOR_DEGREE_CAP = 64

_Z = sympy.Symbol("z")
_U = sympy.Symbol("u")


class DegreeCapExceeded(AlgebraError):
    """Raised when a polynomial is too large for the configured factorization cap."""


@dataclass(frozen=True)
class Factorization:
    """unit * prod(factor^multiplicity); factors monic, irreducible over QQ, sorted by (degree, coeffs)."""

    unit: Fraction
    factors: Tuple[Tuple[Poly, int], ...]

    def expand(self) -> Poly:
        """Multiply the factorization back out."""
        result = Poly.constant(self.unit)
        for factor, multiplicity in self.factors:
            result = result * factor**multiplicity
        return result


def _sympy_rational(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def _from_sympy_rational(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def to_sympy(p: Poly, symbol: sympy.Symbol = _Z) -> sympy.Poly:
    """Convert to a sympy Poly over QQ."""
    return sympy.Poly([_sympy_rational(c) for c in reversed(p.coeffs)] or [0], symbol, domain=sympy.QQ)


def from_sympy(p: sympy.Poly) -> Poly:
    """Convert a univariate sympy Poly with rational coefficients."""
    return Poly(tuple(_from_sympy_rational(c) for c in reversed(p.all_coeffs())))


def poly_factor(p: Poly, degree_cap: int = DEFAULT_FACTOR_DEGREE_CAP) -> Factorization:
    """Complete factorization into monic irreducible factors over the rationals.

    Args:
        p: Nonzero polynomial
        degree_cap: Largest degree accepted

    Returns:
        Factorization: unit and (factor, multiplicity) pairs

    Raises:
        AlgebraError: If p is zero
        DegreeCapExceeded: If deg p exceeds degree_cap
    """
    if p.is_zero:
        raise AlgebraError("cannot factor the zero polynomial")
    if p.degree > degree_cap:
        raise DegreeCapExceeded(f"degree {p.degree} exceeds the factorization cap {degree_cap}")
    if p.degree == 0:
        return Factorization(p.lc, ())

    _, raw_factors = to_sympy(p).factor_list()
    factors: List[Tuple[Poly, int]] = []
    for raw, multiplicity in raw_factors:
        factor = from_sympy(raw)
        if factor.degree < 1:
            continue
        factors.append((factor.monic(), multiplicity))
    factors.sort(key=lambda item: (item[0].degree, item[0].coeffs, item[1]))

    return Factorization(p.lc, tuple(factors))


def poly_rational_roots(p: Poly, degree_cap: int = DEFAULT_FACTOR_DEGREE_CAP) -> List[Tuple[Fraction, int]]:
    """Rational roots with multiplicities, in ascending order."""
    if p.degree <= 0:
        return []
    roots = [(-factor.coeff(0), mult) for factor, mult in poly_factor(p, degree_cap).factors if factor.degree == 1]
    return sorted(roots)


def integer_roots(p: Poly, degree_cap: int = DEFAULT_FACTOR_DEGREE_CAP) -> List[int]:
    """Integer roots in ascending order (multiplicities dropped)."""
    return [int(r) for r, _ in poly_rational_roots(p, degree_cap) if r.denominator == 1]


def poly_resultant(a: Poly, b: Sequence[Poly]) -> Poly:
    """Resultant with respect to z of a(z) and b(z) = sum_k b[k](u) z^k.

    Satisfies Res(a, b) = lc(a)^deg_z(b) * prod over roots alpha of a of b(alpha).

    Args:
        a: Polynomial in z
        b: Coefficients (polynomials in u), low to high, of a polynomial in z

    Returns:
        Poly: The resultant as a polynomial in u

    Raises:
        AlgebraError: If a is zero or b has no positive degree in z
    """
    b = list(b)
    while b and b[-1].is_zero:
        b.pop()
    if a.is_zero:
        raise AlgebraError("resultant with the zero polynomial")
    if len(b) < 2:
        raise AlgebraError("resultant needs b of positive degree in z")

    a_expr = to_sympy(a, _Z).as_expr()
    b_expr = sum(to_sympy(coeff, _U).as_expr() * _Z**k for k, coeff in enumerate(b))
    resultant = sympy.resultant(a_expr, b_expr, _Z)
    return from_sympy(sympy.Poly(sympy.expand(resultant), _U, domain=sympy.QQ))
