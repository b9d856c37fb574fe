"""Rational generating-function guessing and the exact series-expansion oracle."""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from seqformula.algebra import AlgebraError, Poly, RatFun, ratfun_normalize, solve_linear
from seqformula.utils.logging import get_logger

logger = get_logger("guess")


class NoGuess(Exception):
    """Raised when no rational function within the degree budget reproduces the prefix."""


@dataclass(frozen=True)
class SequencePrefix:
    """The first terms a_0, a_1, ... of a sequence."""

    terms: Tuple[Fraction, ...]
    origin_index: int = 0

    def __post_init__(self):
        terms = tuple(Fraction(t) for t in self.terms)
        if not terms:
            raise ValueError("a sequence prefix needs at least one term")
        if self.origin_index != 0:
            raise ValueError("sequence prefixes start at index 0")
        object.__setattr__(self, "terms", terms)

    def __len__(self) -> int:
        return len(self.terms)


@dataclass(frozen=True)
class GuessOptions:
    """Degree budget for guess_rational; a None budget means floor((N-1)/2) for N terms."""

    max_num_degree: Optional[int] = None
    max_den_degree: Optional[int] = None
    guard_terms: int = 0

    def __post_init__(self):
        for name in ("max_num_degree", "max_den_degree", "guard_terms"):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise ValueError(f"{name} must be nonnegative, got {value}")

    def budgets(self, count: int) -> Tuple[int, int]:
        """Numerator and denominator degree budgets for a prefix of `count` terms."""
        default = max((count - 1) // 2, 0)
        num = default if self.max_num_degree is None else self.max_num_degree
        den = default if self.max_den_degree is None else self.max_den_degree
        return num, den


def series_coeffs(f: RatFun, count: int) -> List[Fraction]:
    """Exact power-series coefficients a_0 .. a_{count-1} of f by long division.

    Args:
        f: Rational function with den(0) != 0
        count: Number of coefficients

    Returns:
        List[Fraction]: The coefficients

    Raises:
        AlgebraError: If f is not analytic at 0
    """
    den0 = f.den.coeff(0)
    if den0 == 0:
        raise AlgebraError("generating function is not analytic at 0")
    coeffs: List[Fraction] = []
    for n in range(count):
        acc = f.num.coeff(n)
        for k in range(1, min(n, f.den.degree) + 1):
            acc -= f.den.coeffs[k] * coeffs[n - k]
        coeffs.append(acc / den0)
    return coeffs


def _pade_denominator(terms: Sequence[Fraction], num_degree: int, den_degree: int) -> Optional[Poly]:
    """Denominator q with q(0) = 1 and q*S = p mod x^N, deg p <= num_degree, if one exists."""
    rows = []
    rhs = []
    # coefficient n of q*S for n > num_degree: sum_k q_k a_{n-k} = 0 with q_0 = 1
    for n in range(num_degree + 1, len(terms)):
        rows.append([terms[n - k] if n - k >= 0 else Fraction(0) for k in range(1, den_degree + 1)])
        rhs.append(-terms[n])
    solution = solve_linear(rows, rhs, den_degree)
    if solution is None:
        return None
    return Poly((Fraction(1), *solution))


def _smallest_num_degree(terms: Sequence[Fraction], num_limit: int, den_degree: int) -> Optional[Tuple[int, Poly]]:
    """Binary search for the least consistent numerator degree; consistency is monotone in it."""
    top = _pade_denominator(terms, num_limit, den_degree)
    if top is None:
        return None
    lo, hi, best = 0, num_limit, (num_limit, top)
    while lo < hi:
        mid = (lo + hi) // 2
        q = _pade_denominator(terms, mid, den_degree)
        if q is None:
            lo = mid + 1
        else:
            hi, best = mid, (mid, q)
    return best


def guess_rational(prefix: Union[SequencePrefix, Sequence], opts: Optional[GuessOptions] = None) -> RatFun:
    """Guess the rational generating function of a sequence prefix by Pade approximation.

    Among degree pairs (dn, dd) within the budget and with dn + dd + 1 + guard <= N, the pair with the
    smallest total degree wins; ties go to the smaller denominator degree.

    Args:
        prefix: The sequence prefix (a plain list of terms is accepted)
        opts: Degree budget and guard terms

    Returns:
        RatFun: The canonical rational function, reproducing every input term

    Raises:
        NoGuess: If fewer than 2 terms are given or nothing fits the budget
    """
    if not isinstance(prefix, SequencePrefix):
        prefix = SequencePrefix(tuple(prefix))
    opts = opts or GuessOptions()
    terms = prefix.terms
    count = len(terms)
    if count < 2:
        raise NoGuess(f"need at least 2 terms to guess, got {count}")
    if all(t == 0 for t in terms):
        return RatFun(Poly(), Poly.constant(1))

    num_budget, den_budget = opts.budgets(count)
    logger.debug("Guessing from %d terms, budgets num<=%d den<=%d", count, num_budget, den_budget)

    best: Optional[Tuple[int, int, int, Poly]] = None
    for den_degree in range(den_budget + 1):
        num_limit = min(num_budget, count - 1 - opts.guard_terms - den_degree)
        if num_limit < 0:
            break
        if best is not None and den_degree > best[0]:
            break
        found = _smallest_num_degree(terms, num_limit, den_degree)
        if found is None:
            continue
        num_degree, q = found
        logger.debug("Consistent pair (dn=%d, dd=%d)", num_degree, den_degree)
        total = num_degree + den_degree
        if best is None or total < best[0]:
            best = (total, num_degree, den_degree, q)

    if best is None:
        raise NoGuess(f"no rational function with num degree <= {num_budget}, den degree <= {den_budget} fits")

    _, num_degree, _, q = best
    p = (q * Poly(terms)).truncate(num_degree + 1)
    f = ratfun_normalize(p, q)
    if series_coeffs(f, count) != list(terms):
        raise NoGuess("reduced guess does not reproduce the prefix")
    logger.info("Guessed %s / %s", f.num, f.den)
    return f
