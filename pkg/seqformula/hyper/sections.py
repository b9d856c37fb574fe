"""Multisections of rational generating functions and the m-fold hypergeometric basis search."""

from dataclasses import dataclass
from math import lcm
from typing import List, Optional, Sequence, Tuple

from seqformula.algebra import (
    AlgebraError,
    Poly,
    RatFun,
    echelon_polys,
    poly_divrem,
    poly_factor,
    poly_resultant,
    ratfun_normalize,
    solve_linear,
)
from seqformula.algebra.factor import DEFAULT_FACTOR_DEGREE_CAP, DegreeCapExceeded
from seqformula.guess import series_coeffs
from seqformula.holonomic import HolonomicRE, de_from_ratfun, re_from_de
from seqformula.hyper.petkovsek import DEFAULT_DEGREE_CAP, hyper_solutions
from seqformula.hyper.terms import HyperTerm
from seqformula.utils.logging import get_logger

logger = get_logger("sections")


class NoHypergeometricBasis(Exception):
    """Raised when no m <= m_max gives every section a spanning hypergeometric basis."""


class SolutionDegreeCapExceeded(DegreeCapExceeded):
    """Raised when the search failed only after polynomial solution degrees were cut at the cap."""


@dataclass(frozen=True)
class SearchOptions:
    """Knobs of the m-fold search."""

    m_max: Optional[int] = None
    degree_cap: int = DEFAULT_DEGREE_CAP
    guard_rows: int = 5
    start_cap: int = 8
    factor_degree_cap: int = DEFAULT_FACTOR_DEGREE_CAP


@dataclass(frozen=True)
class MFoldBasis:
    """Per-residue hypergeometric bases for the sections a_{mn+j} of one interlacing modulus m."""

    m: int
    per_residue: Tuple[Tuple[HyperTerm, ...], ...]
    section_gfs: Tuple[RatFun, ...]
    recurrences: Tuple[Optional[HolonomicRE], ...]
    span_starts: Tuple[int, ...]


def power_transform(q: Poly, m: int) -> Poly:
    """Monic polynomial whose roots are the m-th powers of the roots of q, with multiplicity."""
    if q.is_zero:
        raise AlgebraError("power transform of the zero polynomial")
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if q.degree == 0:
        return Poly.constant(1)
    # u - z^m as a polynomial in z with coefficients in u
    b = [Poly()] * (m + 1)
    b[0] = Poly.x()
    b[m] = Poly.constant(-1)
    return poly_resultant(q, b).monic()


def multisection(f: RatFun, m: int) -> List[RatFun]:
    """The m section generating functions g_j(y) = sum_n a_{mn+j} y^n, j = 0 .. m-1.

    Raises:
        AlgebraError: If f is not analytic at 0
    """
    if not f.is_analytic_at_zero:
        raise AlgebraError("multisection needs a generating function analytic at 0")
    norm = power_transform(f.den, m)
    cofactor, remainder = poly_divrem(norm.compose_power(m), f.den)
    if not remainder.is_zero:
        raise AlgebraError("power transform is not divisible by the denominator")
    spread = f.num * cofactor
    return [ratfun_normalize(Poly(spread.coeffs[j::m]), norm) for j in range(m)]


def tail_start(g: RatFun) -> int:
    """First index past the polynomial part of g."""
    return max(0, g.num.degree - g.den.degree + 1)


def reduce_basis(terms: Sequence[HyperTerm]) -> List[HyperTerm]:
    """Row-reduce the Pochhammer-free terms of each base; other terms are kept as they are."""
    bases = sorted({h.base for h in terms if h.is_pochhammer_free})
    reduced = []
    for base in bases:
        polys = [h.polypart for h in terms if h.is_pochhammer_free and h.base == base]
        reduced.extend(HyperTerm(base, p) for p in echelon_polys(polys))
    reduced.extend(h for h in terms if not h.is_pochhammer_free)
    return reduced


def spans(values: Sequence, basis: Sequence[HyperTerm], start: int) -> bool:
    """Whether values[start:] is an exact linear combination of the basis terms."""
    rows = []
    for n in range(start, len(values)):
        row = [h(n) for h in basis]
        if any(v is None for v in row):
            return False
        rows.append(row)
    return solve_linear(rows, list(values[start:]), len(basis)) is not None


def _has_nonlinear_factor(p: Poly, factor_degree_cap: int) -> bool:
    return any(factor.degree > 1 for factor, _ in poly_factor(p, factor_degree_cap).factors)


def _root_power_order(p: Poly) -> Optional[int]:
    """Smallest m with x^m constant modulo the irreducible p, i.e. the roots' m-th powers are rational."""
    if p.degree <= 1:
        return 1
    r = Poly.constant(1)
    for m in range(1, 2 * p.degree**2 + 3):
        _, r = poly_divrem(r * Poly.x(), p)
        if r.degree <= 0:
            return m
    return None


def default_modulus_bound(den: Poly, factor_degree_cap: int = DEFAULT_FACTOR_DEGREE_CAP) -> int:
    """Largest modulus worth trying: deg den, raised to the lcm of the root orders of den's factors.

    A factor whose roots never have a rational power contributes nothing; the search then fails.
    """
    orders = [_root_power_order(factor) for factor, _ in poly_factor(den, factor_degree_cap).factors]
    return max(1, den.degree, lcm(*(order for order in orders if order is not None)))


def _try_modulus(f: RatFun, m: int, options: SearchOptions, capped: List[int]) -> Optional[MFoldBasis]:
    sections = multisection(f, m)
    per_residue, recurrences, starts = [], [], []
    for j, g in enumerate(sections):
        if g.is_zero:
            per_residue.append(())
            recurrences.append(None)
            starts.append(0)
            continue
        if _has_nonlinear_factor(g.den, options.factor_degree_cap):
            logger.debug("m=%d: section %d has an irrational pole, skipping", m, j)
            return None
        re = re_from_de(de_from_ratfun(g))
        truncated: List[int] = []
        basis = reduce_basis(hyper_solutions(re, options.degree_cap, options.factor_degree_cap, truncated))
        start = max(options.start_cap, tail_start(g), re.valid_from)
        count = start + len(basis) + re.order + options.guard_rows
        if not spans(series_coeffs(g, count), basis, start):
            logger.debug("m=%d: %d terms do not span section %d", m, len(basis), j)
            capped.extend(truncated)
            return None
        per_residue.append(tuple(basis))
        recurrences.append(re)
        starts.append(start)
    return MFoldBasis(m, tuple(per_residue), tuple(sections), tuple(recurrences), tuple(starts))


def mfold_search(f: RatFun, m_max: Optional[int] = None, options: Optional[SearchOptions] = None) -> MFoldBasis:
    """Smallest m <= m_max whose sections all have a spanning hypergeometric basis.

    Args:
        f: Generating function analytic at 0
        m_max: Largest modulus tried, default from default_modulus_bound(f.den)
        options: Search knobs; options.m_max is used when m_max is None

    Returns:
        MFoldBasis: The accepted basis

    Raises:
        SolutionDegreeCapExceeded: If no modulus works and a failing section had its polynomial
            solutions cut at options.degree_cap
        NoHypergeometricBasis: If no modulus up to m_max works
    """
    options = options or SearchOptions()
    if m_max is None:
        m_max = options.m_max
    if m_max is None:
        m_max = default_modulus_bound(f.den, options.factor_degree_cap)
    capped: List[int] = []
    for m in range(1, m_max + 1):
        basis = _try_modulus(f, m, options, capped)
        if basis is not None:
            logger.info("Accepted m=%d with basis sizes %s", m, [len(b) for b in basis.per_residue])
            return basis
    if capped:
        raise SolutionDegreeCapExceeded(
            f"polynomial solutions of degree up to {max(capped)} were cut at degree_cap={options.degree_cap}"
        )
    raise NoHypergeometricBasis(f"no rational-base hypergeometric sections for m <= {m_max}")
