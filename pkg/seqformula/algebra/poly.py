"""Dense univariate polynomials and rational functions over the rationals."""

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import comb, gcd
from typing import Iterable, List, Sequence, Tuple, Union

from seqformula.algebra.linalg import rref

Scalar = Union[int, Fraction]


class AlgebraError(ValueError):
    """Raised on undefined algebraic operations (zero divisors, non-analytic expansions)."""


def _to_fraction(value: Scalar) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclass(frozen=True)
class Poly:
    """Dense polynomial with exact rational coefficients, stored low to high.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        coeffs = [_to_fraction(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def constant(cls, value: Scalar) -> "Poly":
        """The constant polynomial `value`."""
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, value: Scalar = 1) -> "Poly":
        """The polynomial value * x^degree."""
        return cls((0,) * degree + (value,))

    @classmethod
    def x(cls) -> "Poly":
        """The identity polynomial x."""
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar]) -> "Poly":
        """The monic polynomial prod (x - r)."""
        return reduce(lambda acc, r: acc * cls((-_to_fraction(r), 1)), roots, cls.constant(1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, k: int) -> Fraction:
        """Coefficient of x^k, zero outside the stored range."""
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __call__(self, value: Scalar) -> Fraction:
        result = Fraction(0)
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __add__(self, other: Union["Poly", Scalar]) -> "Poly":
        other = _as_poly(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return Poly(tuple(self.coeff(k) + other.coeff(k) for k in range(size)))

    __radd__ = __add__

    def __sub__(self, other: Union["Poly", Scalar]) -> "Poly":
        return self + (-_as_poly(other))

    def __rsub__(self, other: Scalar) -> "Poly":
        return _as_poly(other) - self

    def __mul__(self, other: Union["Poly", Scalar]) -> "Poly":
        if not isinstance(other, Poly):
            scale = _to_fraction(other)
            return Poly(tuple(c * scale for c in self.coeffs))
        if self.is_zero or other.is_zero:
            return Poly()
        product = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                product[i + j] += a * b
        return Poly(tuple(product))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise AlgebraError("negative polynomial power")
        result, base = Poly.constant(1), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __floordiv__(self, other: "Poly") -> "Poly":
        return poly_divrem(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return poly_divrem(self, other)[1]

    def scale(self, value: Scalar) -> "Poly":
        """Multiply every coefficient by `value`."""
        return self * _to_fraction(value)

    def monic(self) -> "Poly":
        """Divide by the leading coefficient (zero stays zero)."""
        return self if self.is_zero else self * (1 / self.lc)

    def derivative(self) -> "Poly":
        return Poly(tuple(k * c for k, c in enumerate(self.coeffs))[1:])

    def content(self) -> Fraction:
        """Positive rational content: gcd of numerators over lcm of denominators."""
        if self.is_zero:
            return Fraction(0)
        num = reduce(gcd, (c.numerator for c in self.coeffs))
        den = reduce(lambda a, b: a * b // gcd(a, b), (c.denominator for c in self.coeffs))
        return Fraction(abs(num), den)

    def primitive(self) -> "Poly":
        """Integer polynomial with coprime coefficients and the same sign of leading coefficient."""
        return self if self.is_zero else self * (1 / self.content())

    def shift(self, k: Scalar) -> "Poly":
        """Return q with q(n) = p(n + k)."""
        return poly_shift(self, k)

    def compose_power(self, m: int) -> "Poly":
        """Return p(x^m)."""
        coeffs: List[Fraction] = [Fraction(0)] * (max(self.degree, 0) * m + 1)
        for k, c in enumerate(self.coeffs):
            coeffs[k * m] = c
        return Poly(tuple(coeffs))

    def truncate(self, count: int) -> "Poly":
        """Keep the coefficients of x^0 .. x^(count-1)."""
        return Poly(self.coeffs[:count])

    def to_string(self, var: str = "x", ascending: bool = True) -> str:
        """Plain text such as '1-x+2*x^2'."""
        if self.is_zero:
            return "0"
        pieces = []
        order = range(len(self.coeffs)) if ascending else reversed(range(len(self.coeffs)))
        for k in order:
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if k == 0:
                body = _format_fraction(magnitude)
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if magnitude == 1 else f"{_format_fraction(magnitude)}*{power}"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        return text + "".join(f"{sign}{body}" for sign, body in pieces[1:])

    def __str__(self) -> str:
        return self.to_string()


def _format_fraction(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def _as_poly(value: Union[Poly, Scalar]) -> Poly:
    return value if isinstance(value, Poly) else Poly.constant(value)


def poly_divrem(a: Poly, b: Poly) -> Tuple[Poly, Poly]:
    """Euclidean division a = q*b + r with deg r < deg b.

    Raises:
        AlgebraError: If b is the zero polynomial
    """
    if b.is_zero:
        raise AlgebraError("division by zero polynomial")
    remainder = list(a.coeffs)
    quotient = [Fraction(0)] * max(len(remainder) - len(b.coeffs) + 1, 0)
    inv_lc = 1 / b.lc
    for shift in range(len(quotient) - 1, -1, -1):
        factor = remainder[shift + b.degree] * inv_lc
        if factor == 0:
            continue
        quotient[shift] = factor
        for k, c in enumerate(b.coeffs):
            remainder[shift + k] -= factor * c
    return Poly(tuple(quotient)), Poly(tuple(remainder[: b.degree] if b.degree > 0 else ()))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor.

    Raises:
        AlgebraError: If both inputs are zero
    """
    if a.is_zero and b.is_zero:
        raise AlgebraError("gcd of two zero polynomials")
    while not b.is_zero:
        a, b = b, poly_divrem(a, b)[1].monic()
    return a.monic()


def poly_gcd_many(polys: Sequence[Poly]) -> Poly:
    """Monic gcd of all nonzero polynomials in the sequence."""
    nonzero = [p for p in polys if not p.is_zero]
    if not nonzero:
        raise AlgebraError("gcd of zero polynomials")
    return reduce(poly_gcd, nonzero[1:], nonzero[0].monic())


def poly_shift(p: Poly, k: Scalar) -> Poly:
    """Taylor shift: the polynomial q with q(n) = p(n + k); k may be any rational."""
    k = _to_fraction(k)
    if k == 0 or p.degree <= 0:
        return p
    coeffs = [Fraction(0)] * len(p.coeffs)
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        # (n + k)^i = sum_j C(i, j) k^(i-j) n^j
        for j in range(i + 1):
            coeffs[j] += c * comb(i, j) * k ** (i - j)
    return Poly(tuple(coeffs))


def falling_factorial(start: Poly, length: int) -> Poly:
    """Product start * (start - 1) * ... * (start - length + 1)."""
    return reduce(lambda acc, t: acc * (start - t), range(length), Poly.constant(1))


def echelon_polys(polys: Sequence[Poly]) -> List[Poly]:
    """Reduced echelon basis of the span with pivots on the highest degrees.

    The result is ordered by increasing degree and every polynomial is monic; when the span is all
    polynomials of degree <= d the result is 1, n, ..., n^d.
    """
    nonzero = [p for p in polys if not p.is_zero]
    if not nonzero:
        return []
    width = max(p.degree for p in nonzero) + 1
    rows = [[p.coeff(width - 1 - k) for k in range(width)] for p in nonzero]
    reduced, pivots = rref(rows)
    basis = [Poly(tuple(reversed(reduced[r]))) for r in range(len(pivots))]
    return sorted(basis, key=lambda p: p.degree)


@dataclass(frozen=True)
class RatFun:
    """Canonical rational function num/den: coprime, monic nonzero denominator.

    Build instances through ratfun_normalize (or the arithmetic below), which enforces the
    canonical form.
    """

    num: Poly
    den: Poly

    @classmethod
    def from_poly(cls, p: Poly) -> "RatFun":
        return cls(p, Poly.constant(1))

    @classmethod
    def constant(cls, value: Scalar) -> "RatFun":
        return cls.from_poly(Poly.constant(value))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_analytic_at_zero(self) -> bool:
        return self.den.coeff(0) != 0

    def __call__(self, value: Scalar) -> Fraction:
        den = self.den(value)
        if den == 0:
            raise AlgebraError(f"pole at {value}")
        return self.num(value) / den

    def __neg__(self) -> "RatFun":
        return RatFun(-self.num, self.den)

    def __add__(self, other: "RatFun") -> "RatFun":
        return ratfun_normalize(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "RatFun") -> "RatFun":
        return self + (-other)

    def __mul__(self, other: "RatFun") -> "RatFun":
        return ratfun_normalize(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RatFun") -> "RatFun":
        if other.is_zero:
            raise AlgebraError("division by zero rational function")
        return ratfun_normalize(self.num * other.den, self.den * other.num)

    def __pow__(self, exponent: int) -> "RatFun":
        if exponent < 0:
            return RatFun.constant(1) / (self ** (-exponent))
        return ratfun_normalize(self.num**exponent, self.den**exponent)

    def translate(self, point: Scalar) -> "RatFun":
        """Return f(x + point)."""
        return ratfun_normalize(self.num.shift(point), self.den.shift(point))


def ratfun_normalize(num: Poly, den: Poly) -> RatFun:
    """Reduce num/den and make the denominator monic.

    Raises:
        AlgebraError: If den is the zero polynomial
    """
    if den.is_zero:
        raise AlgebraError("zero denominator")
    if num.is_zero:
        return RatFun(Poly(), Poly.constant(1))
    common = poly_gcd(num, den)
    num, den = num // common, den // common
    scale = 1 / den.lc
    return RatFun(num * scale, den * scale)


def ratfun_translate(f: RatFun, point: Scalar) -> RatFun:
    """The rational function f(x + point)."""
    return f.translate(point)
