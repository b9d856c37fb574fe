"""Plain-text rendering: Sum(...) notation and coefficient expressions."""

from fractions import Fraction
from typing import List

from seqformula.renderers.base import BaseRenderer, Monomial, common_denominator, expand_part, head_polynomial
from seqformula.representation import ResiduePart, SeriesRepresentation


def fraction_text(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def _factors(mono: Monomial, idx: str) -> List[str]:
    factors = []
    if mono.base != 1:
        base = fraction_text(mono.base)
        factors.append(f"{base}^{idx}" if mono.base > 0 and mono.base.denominator == 1 else f"({base})^{idx}")
    if mono.degree == 1:
        factors.append(idx)
    elif mono.degree > 1:
        factors.append(f"{idx}^{mono.degree}")
    for alpha, exponent in mono.pochhammer:
        symbol = f"pochhammer({fraction_text(alpha)}, {idx})"
        if exponent == 1:
            factors.append(symbol)
        elif exponent > 0:
            factors.append(f"{symbol}^{exponent}")
        else:
            factors.append(f"{symbol}^({exponent})")
    return factors


def _monomial_text(magnitude: Fraction, mono: Monomial, idx: str) -> str:
    factors = _factors(mono, idx)
    if not factors:
        return fraction_text(magnitude)
    body = "*".join(factors)
    if magnitude.numerator != 1:
        body = f"{magnitude.numerator}*{body}"
    if magnitude.denominator != 1:
        body = f"{body}/{magnitude.denominator}"
    return body


def _join(signed: List[tuple]) -> str:
    text = ""
    for position, (negative, body) in enumerate(signed):
        if position == 0:
            text = f"-{body}" if negative else body
        else:
            text += f" - {body}" if negative else f" + {body}"
    return text


def coefficient_text(part: ResiduePart, idx: str = "n") -> str:
    """Closed form of a residue part in n, e.g. '(2*(-1)^n*n + (-1)^n + 4*n + 3)/4'."""
    monomials = expand_part(part)
    if not monomials:
        return "0"
    denominator = common_denominator(monomials)
    scale = denominator or 1
    signed = [(m.coeff < 0, _monomial_text(abs(m.coeff) * scale, m, idx)) for m in monomials]
    text = _join(signed)
    return f"({text})/{denominator}" if denominator else text


def index_text(m: int, residue: int, idx: str, sep: str = "*") -> str:
    """The index m*n+j as text."""
    scaled = idx if m == 1 else f"{m}{sep}{idx}"
    return f"{scaled}+{residue}" if residue else scaled


class TextRenderer(BaseRenderer):
    """Renders 'head + Sum(c(n)*x^(m*n+j), n=0..infinity) + ...'."""

    format_name = "text"

    def render(self, rep: SeriesRepresentation) -> str:
        var, idx = self.options.var, self.options.idx
        pieces = []
        head = head_polynomial(rep)
        if not head.is_zero:
            pieces.append(head.to_string(var))
        for part in rep.parts:
            if not part.terms:
                continue
            exponent = index_text(rep.m, part.residue, idx)
            power = f"{var}^{exponent}" if exponent == idx else f"{var}^({exponent})"
            coefficient = coefficient_text(part, idx)
            summand = power if coefficient == "1" else f"({coefficient})*{power}"
            pieces.append(f"Sum({summand}, {idx}=0..infinity)")
        return " + ".join(pieces) if pieces else "0"
