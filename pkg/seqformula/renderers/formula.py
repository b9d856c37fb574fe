"""Theorem-style piecewise formulas."""

from seqformula.pipeline import nth_term
from seqformula.renderers.base import BaseRenderer
from seqformula.renderers.text import coefficient_text, index_text
from seqformula.representation import SeriesRepresentation


class FormulaRenderer(BaseRenderer):
    """Renders initial values then one line per residue class.

    Example for m = 2:

        a(0) = 4
        a(2n+1) = 0 for n >= 0
        a(2n) = (... )/96 for n >= 1
    """

    format_name = "formula"

    def render(self, rep: SeriesRepresentation) -> str:
        idx = self.options.idx
        initial = sorted(rep.m * n + part.residue for part in rep.parts for n in range(part.start))
        lines = [f"a({k}) = {nth_term(rep, k)}" for k in initial]
        ordered = sorted(rep.parts, key=lambda part: (bool(part.terms), part.residue))
        for part in ordered:
            lhs = index_text(rep.m, part.residue, idx, sep="")
            lines.append(f"a({lhs}) = {coefficient_text(part, idx)} for {idx} >= {part.start}")
        return "\n".join(lines)
