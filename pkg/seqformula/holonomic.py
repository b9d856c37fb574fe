"""Holonomic differential and recurrence equations for rational generating functions."""

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from seqformula.algebra import (
    AlgebraError,
    Poly,
    RatFun,
    falling_factorial,
    integer_roots,
    poly_gcd_many,
)
from seqformula.utils.logging import get_logger

logger = get_logger("holonomic")


def _common_content(polys: Sequence[Poly]) -> Fraction:
    return Poly(tuple(c for p in polys for c in p.coeffs)).content()


@dataclass(frozen=True)
class HolonomicDE:
    """sum_k coeffs[k](x) * f^(k)(x) = 0."""

    coeffs: Tuple[Poly, ...]

    def __post_init__(self):
        if not self.coeffs or self.coeffs[-1].is_zero:
            raise AlgebraError("leading coefficient of a differential equation must be nonzero")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class HolonomicRE:
    """sum_i coeffs[i](n) * a_{n+i} = 0 for all n >= valid_from."""

    coeffs: Tuple[Poly, ...]
    valid_from: int = 0

    def __post_init__(self):
        if not self.coeffs or self.coeffs[0].is_zero or self.coeffs[-1].is_zero:
            raise AlgebraError("trailing and leading recurrence coefficients must be nonzero")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def residual(self, values: Sequence[Fraction], n: int) -> Fraction:
        """Left-hand side at index n, read from values[n .. n+order]."""
        return sum((p(n) * values[n + i] for i, p in enumerate(self.coeffs)), Fraction(0))


def de_from_ratfun(f: RatFun) -> HolonomicDE:
    """First-order equation p*q*f' - (p'q - p*q')*f = 0 for f = p/q, divided by its rational content.

    Raises:
        AlgebraError: If f is zero
    """
    if f.is_zero:
        raise AlgebraError("the zero function has no defining differential equation")
    p, q = f.num, f.den
    coeffs = [-(p.derivative() * q - p * q.derivative()), p * q]
    content = _common_content(coeffs)
    return HolonomicDE(tuple(c * (1 / content) for c in coeffs))


def re_from_de(de: HolonomicDE) -> HolonomicRE:
    """Rewrite x^l f^(k) into (n+k-l)^(falling k) a_{n+k-l} and collect by shift.

    The collected recurrence is re-indexed so its lowest shift is a_n, freed of the common polynomial
    divisor of its coefficients and scaled to coprime integer coefficients with a positive leading
    term. valid_from clears every integer root of the removed divisor and of the leading coefficient.
    """
    by_shift: Dict[int, Poly] = defaultdict(Poly)
    for k, poly in enumerate(de.coeffs):
        for l, c in enumerate(poly.coeffs):
            if c == 0:
                continue
            shift = k - l
            by_shift[shift] = by_shift[shift] + falling_factorial(Poly((shift, 1)), k) * c
    shifts = [s for s, p in by_shift.items() if not p.is_zero]
    if not shifts:
        raise AlgebraError("differential equation rewrites to the zero recurrence")
    low, high = min(shifts), max(shifts)
    coeffs = [by_shift[low + i].shift(-low) if low + i in by_shift else Poly() for i in range(high - low + 1)]

    divisor = poly_gcd_many(coeffs)
    coeffs = [c // divisor for c in coeffs]
    content = _common_content(coeffs)
    sign = 1 if coeffs[-1].lc > 0 else -1
    coeffs = [c * (sign / content) for c in coeffs]

    lower = max(0, low)
    blockers = [r for r in integer_roots(divisor * coeffs[-1]) if r >= lower]
    valid_from = max(lower, max(blockers) + 1) if blockers else lower
    logger.debug("Recurrence of order %d valid from %d", len(coeffs) - 1, valid_from)
    return HolonomicRE(tuple(coeffs), valid_from)


def unroll(re: HolonomicRE, initial: Sequence[Fraction], count: int) -> List[Fraction]:
    """Evaluate the recurrence forward from the values at indices below valid_from + order.

    Raises:
        ValueError: If too few initial values are supplied
    """
    needed = re.valid_from + re.order
    if len(initial) < min(needed, count):
        raise ValueError(f"unroll needs {needed} initial values, got {len(initial)}")
    values = [Fraction(v) for v in initial[: max(needed, 0)]]
    lead = re.coeffs[-1]
    for k in range(len(values), count):
        n = k - re.order
        acc = sum((p(n) * values[n + i] for i, p in enumerate(re.coeffs[:-1])), Fraction(0))
        values.append(-acc / lead(n))
    return values[:count]
