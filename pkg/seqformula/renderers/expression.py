"""Rational functions as parseable expression text."""

from seqformula.algebra import RatFun


def render_ratfun(f: RatFun, var: str = "x") -> str:
    """Plain expression with ascending powers, scaled so the denominator's constant term is 1.

    The output parses back to f with parse_expression, e.g. '1/(1-x)'.
    """
    den0 = f.den.coeff(0)
    scale = 1 / den0 if den0 != 0 else 1
    num, den = f.num * scale, f.den * scale
    num_text = num.to_string(var)
    if den.degree == 0 and den.lc == 1:
        return num_text
    if sum(1 for c in num.coeffs if c != 0) > 1:
        num_text = f"({num_text})"
    return f"{num_text}/({den.to_string(var)})"
