"""m-fold hypergeometric term solutions of section recurrences."""

from seqformula.hyper.petkovsek import degree_bound, hyper_solutions, poly_solutions
from seqformula.hyper.sections import (
    MFoldBasis,
    NoHypergeometricBasis,
    SearchOptions,
    SolutionDegreeCapExceeded,
    default_modulus_bound,
    mfold_search,
    multisection,
    power_transform,
    reduce_basis,
    spans,
    tail_start,
)
from seqformula.hyper.terms import Certificate, HyperTerm, certificate_of, rising_factorial

__all__ = [
    "Certificate",
    "HyperTerm",
    "MFoldBasis",
    "NoHypergeometricBasis",
    "SearchOptions",
    "SolutionDegreeCapExceeded",
    "certificate_of",
    "default_modulus_bound",
    "degree_bound",
    "hyper_solutions",
    "mfold_search",
    "multisection",
    "poly_solutions",
    "power_transform",
    "reduce_basis",
    "rising_factorial",
    "spans",
    "tail_start",
]
