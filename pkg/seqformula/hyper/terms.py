"""Hypergeometric terms z^n * u(n) * prod (alpha)_n^e and their certificates."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from seqformula.algebra import AlgebraError, Poly, RatFun, ratfun_normalize


def rising_factorial(alpha: Fraction, n: int) -> Fraction:
    """(alpha)_n = alpha (alpha + 1) ... (alpha + n - 1)."""
    result = Fraction(1)
    for k in range(n):
        result *= alpha + k
    return result


@dataclass(frozen=True)
class HyperTerm:
    """h(n) = base^n * polypart(n) * prod (alpha)_n^exponent."""

    base: Fraction
    polypart: Poly
    pochhammer: Tuple[Tuple[Fraction, int], ...] = ()

    def __post_init__(self):
        base = Fraction(self.base)
        if base == 0:
            raise AlgebraError("hypergeometric term base must be nonzero")
        if self.polypart.is_zero:
            raise AlgebraError("hypergeometric term polynomial part must be nonzero")
        merged = {}
        for alpha, exponent in self.pochhammer:
            alpha = Fraction(alpha)
            merged[alpha] = merged.get(alpha, 0) + exponent
        factors = tuple(sorted((a, e) for a, e in merged.items() if e != 0))
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "pochhammer", factors)

    @property
    def is_pochhammer_free(self) -> bool:
        return not self.pochhammer

    def __call__(self, n: int) -> Optional[Fraction]:
        """Value at n, or None where a negative power of a vanishing Pochhammer symbol appears."""
        value = self.base**n * self.polypart(n)
        for alpha, exponent in self.pochhammer:
            rising = rising_factorial(alpha, n)
            if rising == 0 and exponent < 0:
                return None
            value *= rising**exponent
        return value

    def scaled(self, polypart: Poly) -> "HyperTerm":
        """The same base and Pochhammer factors with a new polynomial part."""
        return HyperTerm(self.base, polypart, self.pochhammer)


@dataclass(frozen=True)
class Certificate:
    """The ratio h(n+1)/h(n) of a hypergeometric term."""

    ratio: RatFun

    def __post_init__(self):
        if self.ratio.is_zero:
            raise AlgebraError("a certificate is a nonzero rational function")


def certificate_of(h: HyperTerm) -> Certificate:
    """h(n+1)/h(n) as a reduced rational function of n."""
    num = h.polypart.shift(1) * h.base
    den = h.polypart
    for alpha, exponent in h.pochhammer:
        factor = Poly((alpha, 1))
        if exponent > 0:
            num = num * factor**exponent
        else:
            den = den * factor ** (-exponent)
    return Certificate(ratfun_normalize(num, den))
