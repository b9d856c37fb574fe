"""LaTeX rendering."""

from fractions import Fraction
from typing import List

from seqformula.algebra import Poly
from seqformula.renderers.base import BaseRenderer, Monomial, common_denominator, expand_part, head_polynomial
from seqformula.representation import ResiduePart, SeriesRepresentation


def _latex_number(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    sign = "-" if value < 0 else ""
    return f"{sign}\\frac{{{abs(value.numerator)}}}{{{value.denominator}}}"


def _wrapped(value: Fraction) -> str:
    if value.denominator == 1 and value > 0:
        return str(value.numerator)
    return f"\\left({_latex_number(value)}\\right)"


def _factors(mono: Monomial, idx: str):
    upper, lower = [], []
    if mono.base != 1:
        upper.append(f"{_wrapped(mono.base)}^{{{idx}}}")
    if mono.degree == 1:
        upper.append(idx)
    elif mono.degree > 1:
        upper.append(f"{idx}^{{{mono.degree}}}")
    for alpha, exponent in mono.pochhammer:
        symbol = f"\\left({_latex_number(alpha)}\\right)_{{{idx}}}"
        power = abs(exponent)
        target = upper if exponent > 0 else lower
        target.append(symbol if power == 1 else f"{symbol}^{{{power}}}")
    return upper, lower


def _monomial_latex(magnitude: Fraction, mono: Monomial, idx: str) -> str:
    upper, lower = _factors(mono, idx)
    if magnitude.numerator != 1 or not upper:
        upper.insert(0, str(magnitude.numerator))
    if magnitude.denominator != 1:
        lower.insert(0, str(magnitude.denominator))
    top = " ".join(upper)
    return f"\\frac{{{top}}}{{{' '.join(lower)}}}" if lower else top


def _join(signed: List[tuple]) -> str:
    text = ""
    for position, (negative, body) in enumerate(signed):
        if position == 0:
            text = f"-{body}" if negative else body
        else:
            text += f"-{body}" if negative else f"+{body}"
    return text


def coefficient_latex(part: ResiduePart, idx: str = "n") -> str:
    """Closed form of a residue part as LaTeX."""
    monomials = expand_part(part)
    if not monomials:
        return "0"
    denominator = common_denominator(monomials)
    scale = denominator or 1
    text = _join([(m.coeff < 0, _monomial_latex(abs(m.coeff) * scale, m, idx)) for m in monomials])
    return f"\\frac{{{text}}}{{{denominator}}}" if denominator else text


def polynomial_latex(p: Poly, var: str = "x") -> str:
    """Ascending powers, e.g. '2-x^{2}'."""
    signed = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        power = "" if k == 0 else (var if k == 1 else f"{var}^{{{k}}}")
        magnitude = abs(c)
        if not power:
            body = _latex_number(magnitude)
        elif magnitude == 1:
            body = power
        else:
            body = f"{_latex_number(magnitude)} {power}"
        signed.append((c < 0, body))
    return _join(signed) if signed else "0"


class LatexRenderer(BaseRenderer):
    """Renders 'head+\\sum_{n=0}^{\\infty} \\left(c(n)\\right) x^{m n + j}+...'."""

    format_name = "latex"

    def render(self, rep: SeriesRepresentation) -> str:
        var, idx = self.options.var, self.options.idx
        pieces = []
        head = head_polynomial(rep)
        if not head.is_zero:
            pieces.append(polynomial_latex(head, var))
        for part in rep.parts:
            if not part.terms:
                continue
            scaled = idx if rep.m == 1 else f"{rep.m} {idx}"
            exponent = f"{scaled} + {part.residue}" if part.residue else scaled
            coefficient = coefficient_latex(part, idx)
            summand = f"{var}^{{{exponent}}}" if coefficient == "1" else (
                f"\\left({coefficient}\\right) {var}^{{{exponent}}}"
            )
            pieces.append(f"\\sum_{{{idx}=0}}^{{\\infty}} {summand}")
        return "+".join(pieces) if pieces else "0"
