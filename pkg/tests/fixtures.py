"""Shared sequences, generating functions and random generators for the tests."""

import random
from fractions import Fraction
from typing import List

from seqformula.algebra import Poly, RatFun, ratfun_normalize
from seqformula.hyper.terms import HyperTerm
from seqformula.representation import Correction, ResiduePart, SeriesRepresentation, WeightedTerm

# Palindromic squares k^2 with palindromic k, by number of digits (OEIS A307717)
A307717_TERMS = [4, 0, 2, 0, 5, 0, 3, 0, 8, 0, 5, 0, 13, 0, 9, 0, 22, 0, 16, 0, 37, 0, 27, 0, 60, 0, 43, 0, 93, 0, 65, 0, 138]
A307717_GF_TEXT = "-(2*x^16-x^14-5*x^12+5*x^10+12*x^8-5*x^6-11*x^4+2*x^2+4)/(-x^16+4*x^12-6*x^8+4*x^4-1)"

# OEIS A226782
A226782_TERMS = [0, 0, 1, 0, 4, 0, 2, 0, 7, 0, 3, 0, 10, 0, 4, 0, 13]
A226782_GF_TEXT = "-(-x^8+4*x^4+x^2)/(-x^8+2*x^4-1)"

FIBONACCI_TERMS = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89]

A307717_BASE_ONE_WEIGHTS = [Fraction(57, 32), Fraction(37, 32), Fraction(-5, 32), Fraction(1, 32)]
A307717_ALTERNATING_WEIGHTS = [Fraction(7, 32), Fraction(65, 96), Fraction(-3, 32), Fraction(1, 96)]


def a307717_gf() -> RatFun:
    num = Poly((4, 0, 2, 0, -11, 0, -5, 0, 12, 0, 5, 0, -5, 0, -1, 0, 2))
    den = Poly((-1, 0, 0, 0, 4, 0, 0, 0, -6, 0, 0, 0, 4, 0, 0, 0, -1))
    return ratfun_normalize(-num, den)


def a226782_gf() -> RatFun:
    num = Poly((0, 0, 1, 0, 4, 0, 0, 0, -1))
    den = Poly((-1, 0, 0, 0, 2, 0, 0, 0, -1))
    return ratfun_normalize(-num, den)


def geometric_gf() -> RatFun:
    """1/(1-x)."""
    return ratfun_normalize(Poly.constant(1), Poly((1, -1)))


def fibonacci_gf() -> RatFun:
    """x/(1-x-x^2)."""
    return ratfun_normalize(Poly.x(), Poly((1, -1, -1)))


def random_fraction(rng: random.Random, bound: int = 5) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, 3))


def random_poly(rng: random.Random, degree: int, bound: int = 5) -> Poly:
    """Random polynomial of exactly the given degree."""
    coeffs = [random_fraction(rng, bound) for _ in range(degree)]
    lead = Fraction(0)
    while lead == 0:
        lead = random_fraction(rng, bound)
    return Poly(tuple(coeffs) + (lead,))


def random_ratfun(rng: random.Random, max_degree: int = 6) -> RatFun:
    """Random nonzero rational function analytic at 0."""
    num = random_poly(rng, rng.randint(0, max_degree))
    den = random_poly(rng, rng.randint(1, max_degree))
    while den.coeff(0) == 0:
        den = den + Poly.constant(rng.randint(1, 4))
    return ratfun_normalize(num, den)


RATIOS = [Fraction(r) for r in (1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2), 3)]


def random_product_gf(rng: random.Random, max_total_degree: int = 12) -> RatFun:
    """c / prod (1 - r x^s) with s <= 4 and total denominator degree at most max_total_degree."""
    den = Poly.constant(1)
    for _ in range(rng.randint(1, 3)):
        s = rng.choice([1, 2, 3, 4])
        if den.degree + s > max_total_degree:
            break
        r = rng.choice(RATIOS)
        den = den * (Poly.constant(1) - Poly.monomial(s, r))
    c = Fraction(rng.choice([1, -1, 2, 3]), rng.choice([1, 2]))
    return ratfun_normalize(Poly.constant(c), den)


def sequence(values: List[int]) -> List[Fraction]:
    return [Fraction(v) for v in values]


def _part(residue: int, start: int, weighted) -> ResiduePart:
    terms = tuple(WeightedTerm(Fraction(w), HyperTerm(Fraction(base), poly, poch)) for w, base, poly, poch in weighted)
    return ResiduePart(residue, start, terms)


def a307717_representation() -> SeriesRepresentation:
    """The bisected closed form of the palindromic squares, built by hand."""
    weighted = [(w, 1, Poly.monomial(k), ()) for k, w in enumerate(A307717_BASE_ONE_WEIGHTS)]
    weighted += [(w, -1, Poly.monomial(k), ()) for k, w in enumerate(A307717_ALTERNATING_WEIGHTS)]
    return SeriesRepresentation(2, (_part(0, 1, weighted), ResiduePart(1)), (Correction(0, Fraction(2)),))


def a226782_representation() -> SeriesRepresentation:
    weighted = [
        (Fraction(3, 4), 1, Poly.constant(1), ()),
        (Fraction(1, 4), -1, Poly.constant(1), ()),
        (1, 1, Poly.x(), ()),
        (Fraction(1, 2), -1, Poly.x(), ()),
    ]
    return SeriesRepresentation(2, (_part(0, 1, weighted), ResiduePart(1)), (Correction(0, Fraction(-1)),))


def exponential_representation() -> SeriesRepresentation:
    """sum x^n / n!, a term with a Pochhammer factor."""
    return SeriesRepresentation(1, (_part(0, 0, [(1, 1, Poly.constant(1), ((Fraction(1), -1),))]),))
