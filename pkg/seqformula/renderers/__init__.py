"""Renderers for series representations."""

import inspect
import sys
from typing import Dict, Optional, Type

from seqformula.renderers.base import FORMATS, BaseRenderer, RenderOptions
from seqformula.renderers.expression import render_ratfun
from seqformula.renderers.formula import FormulaRenderer
from seqformula.renderers.json_format import JsonRenderer, parse_json
from seqformula.renderers.latex import LatexRenderer
from seqformula.renderers.text import TextRenderer
from seqformula.representation import SeriesRepresentation


def available_renderers() -> Dict[str, Type[BaseRenderer]]:
    """Renderer classes of this package keyed by format name."""
    module = sys.modules[__name__]
    return {
        cls.format_name: cls
        for _, cls in inspect.getmembers(module)
        if inspect.isclass(cls) and issubclass(cls, BaseRenderer) and cls is not BaseRenderer
    }


def render(rep: SeriesRepresentation, opts: Optional[RenderOptions] = None) -> str:
    """Render a representation in the format named by the options."""
    opts = opts or RenderOptions()
    return available_renderers()[opts.format](opts).render(rep)


__all__ = [
    "FORMATS",
    "BaseRenderer",
    "FormulaRenderer",
    "JsonRenderer",
    "LatexRenderer",
    "RenderOptions",
    "TextRenderer",
    "available_renderers",
    "parse_json",
    "render",
    "render_ratfun",
]
