"""Series representation data structures."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

from seqformula.hyper.terms import HyperTerm


@dataclass(frozen=True)
class WeightedTerm:
    """A hypergeometric term with its rational weight.

    Attributes:
        weight: Nonzero rational coefficient
        term: The hypergeometric term
    """

    weight: Fraction
    term: HyperTerm


@dataclass(frozen=True)
class ResiduePart:
    """Closed form of the section a_{mn+residue}, valid for n >= start.

    Attributes:
        residue: Residue class j in 0 .. m-1
        start: First n where the closed form holds without correction
        terms: Weighted terms; empty for an identically zero section
    """

    residue: int
    start: int = 0
    terms: Tuple[WeightedTerm, ...] = ()

    def value(self, n: int) -> Fraction:
        """Formula value at n; undefined terms contribute zero."""
        total = Fraction(0)
        for wt in self.terms:
            v = wt.term(n)
            if v is not None:
                total += wt.weight * v
        return total


@dataclass(frozen=True)
class Correction:
    """Adjustment a_index = formula + delta at a small index.

    Attributes:
        index: Absolute sequence index k
        delta: Nonzero rational difference oracle - formula
    """

    index: int
    delta: Fraction


@dataclass(frozen=True)
class SeriesRepresentation:
    """Interlaced hypergeometric-type representation of a sequence.

    Attributes:
        m: Interlacing modulus
        parts: One ResiduePart per residue class, in residue order
        corrections: Finite corrections, sorted by index
    """

    m: int
    parts: Tuple[ResiduePart, ...]
    corrections: Tuple[Correction, ...] = ()

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"interlacing modulus must be positive, got {self.m}")
        if [p.residue for p in self.parts] != list(range(self.m)):
            raise ValueError("parts must list residues 0 .. m-1 in order")
        object.__setattr__(self, "corrections", tuple(sorted(self.corrections, key=lambda c: c.index)))

    def correction_map(self) -> Dict[int, Fraction]:
        return {c.index: c.delta for c in self.corrections}

    def formula_value(self, k: int) -> Fraction:
        """Uncorrected formula value at absolute index k."""
        n, j = divmod(k, self.m)
        return self.parts[j].value(n)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of comparing a representation with reference terms.

    Attributes:
        checked_terms: Number of terms compared
        first_mismatch: First index that differs, None when all match
    """

    checked_terms: int
    first_mismatch: Optional[int] = None

    @property
    def all_match(self) -> bool:
        return self.first_mismatch is None
