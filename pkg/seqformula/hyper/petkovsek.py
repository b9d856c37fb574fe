"""Polynomial and hypergeometric solutions of linear recurrences with polynomial coefficients."""

from fractions import Fraction
from itertools import product
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from seqformula.algebra import Poly, echelon_polys, integer_roots, nullspace, poly_rational_roots
from seqformula.algebra.factor import DEFAULT_FACTOR_DEGREE_CAP
from seqformula.holonomic import HolonomicRE
from seqformula.hyper.terms import HyperTerm, certificate_of
from seqformula.utils.logging import get_logger

DEFAULT_DEGREE_CAP = 50

logger = get_logger("petkovsek")


def _difference_form(coeffs: Sequence[Poly]) -> List[Poly]:
    """Coefficients r_k of the same operator written in powers of the forward difference."""
    return [
        sum((p * comb(i, k) for i, p in enumerate(coeffs) if i >= k), Poly())
        for k in range(len(coeffs))
    ]


def degree_bound(coeffs: Sequence[Poly]) -> int:
    """Largest degree a polynomial solution can have, or -1 when none can exist."""
    diffs = _difference_form(coeffs)
    top = max(r.degree - k for k, r in enumerate(diffs) if not r.is_zero)
    indicial = Poly()
    for k, r in enumerate(diffs):
        if not r.is_zero and r.degree - k == top:
            indicial = indicial + _falling_in_d(k) * r.lc
    roots = [r for r in integer_roots(indicial) if r >= 0]
    return max(roots) if roots else -1


def _falling_in_d(k: int) -> Poly:
    result = Poly.constant(1)
    for t in range(k):
        result = result * Poly((-t, 1))
    return result


def _apply(coeffs: Sequence[Poly], c: Poly) -> Poly:
    return sum((p * c.shift(i) for i, p in enumerate(coeffs)), Poly())


def poly_solutions(
    re: HolonomicRE, degree_cap: int = DEFAULT_DEGREE_CAP, truncated: Optional[List[int]] = None
) -> List[Poly]:
    """Basis of the polynomial solutions c with sum_i p_i(n) c(n+i) = 0 identically.

    The basis is in echelon form with distinct leading degrees, so a full solution space of degree d
    comes back as 1, n, ..., n^d. Degree bounds above degree_cap are cut to the cap and appended to
    `truncated` when a list is given.
    """
    bound = degree_bound(re.coeffs)
    if bound < 0:
        return []
    if bound > degree_cap:
        logger.warning("Polynomial solution degree bound %d truncated to %d", bound, degree_cap)
        if truncated is not None:
            truncated.append(bound)
        bound = degree_cap

    images = [_apply(re.coeffs, Poly.monomial(j)) for j in range(bound + 1)]
    height = max(img.degree for img in images) + 1
    if height <= 0:
        return [Poly.monomial(j) for j in range(bound + 1)]
    rows = [[img.coeff(t) for img in images] for t in range(height)]
    solutions = [Poly(tuple(vector)) for vector in nullspace(rows, bound + 1)]
    return echelon_polys(solutions)


def _linear_divisors(p: Poly, factor_degree_cap: int) -> List[Tuple[Poly, Tuple[Fraction, ...]]]:
    """Monic divisors of p built from its linear factors, each with its list of roots."""
    choices = [
        [(root,) * k for k in range(mult + 1)] for root, mult in poly_rational_roots(p, factor_degree_cap)
    ]
    divisors = []
    for combo in product(*choices):
        roots = tuple(r for group in combo for r in group)
        divisors.append((Poly.from_roots(roots), roots))
    return divisors


def _is_nonnegative_integer(value: Fraction) -> bool:
    return value.denominator == 1 and value >= 0


def hyper_solutions(
    re: HolonomicRE,
    degree_cap: int = DEFAULT_DEGREE_CAP,
    factor_degree_cap: int = DEFAULT_FACTOR_DEGREE_CAP,
    truncated: Optional[List[int]] = None,
) -> List[HyperTerm]:
    """Hypergeometric solutions over the rationals.

    Candidate certificates are z * a(n)/b(n) * c(n+1)/c(n) with a a monic divisor of p_0(n), b a monic
    divisor of p_d(n-d+1), z a rational root of the leading-term equation and c a polynomial solution
    of the auxiliary recurrence. Only divisors made of linear factors are enumerated.

    Args:
        re: Recurrence of order d >= 1 (order 0 has no nonzero solutions on its tail)
        degree_cap: Cap on polynomial-solution degrees
        factor_degree_cap: Cap on factorization degrees
        truncated: Receives the degree bounds that were cut to degree_cap

    Returns:
        List[HyperTerm]: Terms deduplicated by certificate, Pochhammer-free representatives first
    """
    order = re.order
    if order == 0:
        return []
    trailing = re.coeffs[0]
    leading = re.coeffs[-1].shift(1 - order)

    found: Dict = {}
    for (a, a_roots), (b, b_roots) in product(
        _linear_divisors(trailing, factor_degree_cap), _linear_divisors(leading, factor_degree_cap)
    ):
        if any(_is_nonnegative_integer(r) for r in a_roots + b_roots):
            continue
        shifted = []
        for i, p in enumerate(re.coeffs):
            term = p
            for j in range(i):
                term = term * a.shift(j)
            for j in range(i, order):
                term = term * b.shift(j)
            shifted.append(term)
        top = max(p.degree for p in shifted)
        z_poly = Poly(tuple(p.lc if p.degree == top else Fraction(0) for p in shifted))
        pochhammer = tuple((-r, 1) for r in a_roots) + tuple((-r, -1) for r in b_roots)
        for z, _ in poly_rational_roots(z_poly, factor_degree_cap):
            if z == 0:
                continue
            aux = HolonomicRE(tuple(p * z**i for i, p in enumerate(shifted)))
            for c in poly_solutions(aux, degree_cap, truncated):
                logger.debug("Candidate a=%s b=%s z=%s c=%s", a, b, z, c)
                term = HyperTerm(z, c, pochhammer)
                key = certificate_of(term).ratio
                kept = found.get(key)
                if kept is None or (not kept.is_pochhammer_free and term.is_pochhammer_free):
                    found[key] = term

    terms = sorted(
        found.values(), key=lambda h: (not h.is_pochhammer_free, h.base, h.polypart.degree, h.pochhammer)
    )
    logger.debug("Recurrence of order %d has %d hypergeometric solutions", order, len(terms))
    return terms
