"""Base renderer interface and the monomial view shared by the renderers."""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Dict, List, Optional, Tuple

from seqformula.algebra import Poly
from seqformula.representation import ResiduePart, SeriesRepresentation

FORMATS = ("text", "latex", "json", "formula")
MAX_COMMON_DENOMINATOR = 10**6

Pochhammer = Tuple[Tuple[Fraction, int], ...]


@dataclass(frozen=True)
class RenderOptions:
    """Output format and variable names."""

    format: str = "text"
    var: str = "x"
    idx: str = "n"

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}, expected one of {', '.join(FORMATS)}")
        for name in (self.var, self.idx):
            if not name.isidentifier():
                raise ValueError(f"variable name {name!r} is not an identifier")
        if self.var == self.idx:
            raise ValueError("series and index variables must differ")


@dataclass(frozen=True)
class Monomial:
    """coeff * base^n * n^degree * prod (alpha)_n^e."""

    coeff: Fraction
    base: Fraction
    degree: int
    pochhammer: Pochhammer = ()


def expand_part(part: ResiduePart) -> List[Monomial]:
    """Weighted terms multiplied out into monomials, ordered by base ascending then degree descending."""
    collected: Dict[Tuple[Fraction, int, Pochhammer], Fraction] = {}
    for wt in part.terms:
        for degree, c in enumerate(wt.term.polypart.coeffs):
            if c == 0:
                continue
            key = (wt.term.base, degree, wt.term.pochhammer)
            collected[key] = collected.get(key, Fraction(0)) + wt.weight * c
    ordered = sorted(collected.items(), key=lambda item: (item[0][2], item[0][0], -item[0][1]))
    return [Monomial(c, base, degree, poch) for (base, degree, poch), c in ordered if c != 0]


def common_denominator(monomials: List[Monomial]) -> Optional[int]:
    """Denominator to pull out of a residue's sum, or None when no compaction applies."""
    if len(monomials) < 2:
        return None
    denominator = lcm(*(m.coeff.denominator for m in monomials))
    if denominator == 1 or denominator > MAX_COMMON_DENOMINATOR:
        return None
    return denominator


def head_polynomial(rep: SeriesRepresentation) -> Poly:
    """The corrections as a polynomial in the series variable."""
    size = max((c.index for c in rep.corrections), default=-1) + 1
    coeffs = [Fraction(0)] * size
    for c in rep.corrections:
        coeffs[c.index] += c.delta
    return Poly(tuple(coeffs))


class BaseRenderer(ABC):
    """Abstract base class for representation renderers."""

    format_name: str = ""

    def __init__(self, options: Optional[RenderOptions] = None) -> None:
        """Initialize the renderer.

        Args:
            options: Render options; the format field is ignored
        """
        self.options = options or RenderOptions(self.format_name)

    @abstractmethod
    def render(self, rep: SeriesRepresentation) -> str:
        """Render a representation."""
