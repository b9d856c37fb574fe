"""Lossless JSON rendering and its parser."""

import json
import re
from fractions import Fraction
from typing import Any, Dict

from seqformula.algebra import Poly
from seqformula.hyper.terms import HyperTerm
from seqformula.parsing import ParseError
from seqformula.renderers.base import BaseRenderer
from seqformula.representation import Correction, ResiduePart, SeriesRepresentation, WeightedTerm

_RATIONAL_RE = re.compile(r"^-?\d+(?:/\d+)?$")


def rational_to_json(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def rational_from_json(value: Any) -> Fraction:
    """Accepts 'p/q' strings, integer strings and plain integers."""
    if isinstance(value, bool):
        raise ParseError(f"expected a rational, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str) or not _RATIONAL_RE.match(value):
        raise ParseError(f"expected a rational 'p/q', got {value!r}")
    try:
        return Fraction(value)
    except ZeroDivisionError as e:
        raise ParseError(f"zero denominator in {value!r}") from e


def _term_to_json(wt: WeightedTerm) -> Dict[str, Any]:
    return {
        "weight": rational_to_json(wt.weight),
        "base": rational_to_json(wt.term.base),
        "poly": [rational_to_json(c) for c in wt.term.polypart.coeffs],
        "pochhammer": [{"alpha": rational_to_json(a), "exp": e} for a, e in wt.term.pochhammer],
    }


def to_json_data(rep: SeriesRepresentation) -> Dict[str, Any]:
    """The representation as plain JSON-compatible data."""
    return {
        "m": rep.m,
        "parts": [
            {"residue": part.residue, "start": part.start, "terms": [_term_to_json(wt) for wt in part.terms]}
            for part in rep.parts
        ],
        "corrections": [{"index": c.index, "delta": rational_to_json(c.delta)} for c in rep.corrections],
    }


def _integer(data: Dict[str, Any], key: str) -> int:
    value = data.get(key)
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"field {key!r} must be an integer, got {value!r}")
    return value


def _list(data: Dict[str, Any], key: str) -> list:
    value = data.get(key, [])
    if not isinstance(value, list):
        raise ParseError(f"field {key!r} must be a list")
    return value


def _mapping(value: Any, what: str) -> Dict[str, Any]:
    if not isinstance(value, dict):
        raise ParseError(f"{what} must be an object")
    return value


def _term_from_json(data: Dict[str, Any]) -> WeightedTerm:
    data = _mapping(data, "term")
    pochhammer = tuple(
        (rational_from_json(_mapping(p, "pochhammer factor").get("alpha")), _integer(p, "exp"))
        for p in _list(data, "pochhammer")
    )
    term = HyperTerm(
        rational_from_json(data.get("base")),
        Poly(tuple(rational_from_json(c) for c in _list(data, "poly"))),
        pochhammer,
    )
    return WeightedTerm(rational_from_json(data.get("weight")), term)


def from_json_data(data: Any) -> SeriesRepresentation:
    """Inverse of to_json_data.

    Raises:
        ParseError: If the data does not follow the schema
    """
    data = _mapping(data, "representation")
    try:
        parts = tuple(
            ResiduePart(
                _integer(_mapping(part, "part"), "residue"),
                _integer(part, "start"),
                tuple(_term_from_json(t) for t in _list(part, "terms")),
            )
            for part in _list(data, "parts")
        )
        corrections = tuple(
            Correction(_integer(_mapping(c, "correction"), "index"), rational_from_json(c.get("delta")))
            for c in _list(data, "corrections")
        )
        return SeriesRepresentation(_integer(data, "m"), parts, corrections)
    except ParseError:
        raise
    except ValueError as e:
        raise ParseError(f"invalid representation: {e}") from e


def parse_json(text: str) -> SeriesRepresentation:
    """Parse the output of the json format back into a representation.

    Raises:
        ParseError: On malformed JSON or schema violations
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"malformed JSON: {e.msg}", e.pos, e.lineno) from e
    return from_json_data(data)


class JsonRenderer(BaseRenderer):
    """Renders the full data model as indented JSON."""

    format_name = "json"

    def render(self, rep: SeriesRepresentation) -> str:
        return json.dumps(to_json_data(rep), indent=2)
