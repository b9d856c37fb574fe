"""Parsers for rational-function expressions, inline sequence lists and OEIS b-files.

Expression grammar (whitespace is ignored):

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('-' | '+') unary | power
    power  := atom (('^' | '**') unary)?
    atom   := NUMBER | NAME | '(' expr ')'

'^' is right-associative and its exponent must evaluate to a nonnegative integer constant.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from seqformula.algebra import AlgebraError, Poly, RatFun
from seqformula.guess import SequencePrefix
from seqformula.utils.logging import get_logger

logger = get_logger("parsing")

TOO_DEEP = "expression nested too deeply"


class ParseError(ValueError):
    """Raised on malformed input.

    Attributes:
        position: Character offset of the problem, when known
        line: 1-based line number, when known
    """

    def __init__(self, message: str, position: Optional[int] = None, line: Optional[int] = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if position is not None:
            where.append(f"position {position}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)
        self.position = position
        self.line = line


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    operand: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exponent: "Node"
    position: int


@dataclass(frozen=True)
class Group:
    inner: "Node"


Node = Union[Num, Var, Neg, BinOp, Pow, Group]


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<number>\d+(?:\.\d*)?|\.\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>\*\*|[-+*/^()]))",
    re.ASCII,
)


def tokenize(text: str) -> List[Token]:
    """Split an expression into tokens, ending with an 'end' token."""
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class _Parser:
    """Recursive-descent parser over a token list."""

    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def _accept(self, *ops: str) -> Optional[Token]:
        if self.current.kind == "op" and self.current.text in ops:
            return self._advance()
        return None

    def parse(self) -> Node:
        node = self._expr()
        token = self.current
        if token.kind != "end":
            if token.kind in ("number", "name") or token.text == "(":
                raise ParseError("implicit multiplication is not supported", token.position)
            raise ParseError(f"unexpected {token.text!r}", token.position)
        return node

    def _expr(self) -> Node:
        node = self._term()
        while True:
            token = self._accept("+", "-")
            if token is None:
                return node
            node = BinOp(token.text, node, self._term())

    def _term(self) -> Node:
        node = self._unary()
        while True:
            token = self._accept("*", "/")
            if token is None:
                return node
            node = BinOp(token.text, node, self._unary())

    def _unary(self) -> Node:
        if self._accept("-"):
            return Neg(self._unary())
        if self._accept("+"):
            return self._unary()
        return self._power()

    def _power(self) -> Node:
        base = self._atom()
        token = self._accept("^", "**")
        if token is None:
            return base
        return Pow(base, self._unary(), token.position)

    def _atom(self) -> Node:
        token = self.current
        if token.kind == "number":
            self._advance()
            return Num(Fraction(token.text))
        if token.kind == "name":
            self._advance()
            return Var(token.text)
        if self._accept("("):
            inner = self._expr()
            if not self._accept(")"):
                raise ParseError("expected ')'", self.current.position)
            return Group(inner)
        if token.kind == "end":
            raise ParseError("unexpected end of input", token.position)
        raise ParseError(f"unexpected {token.text!r}", token.position)


def parse_ast(text: str) -> Node:
    """Parse an expression into its syntax tree."""
    try:
        return _Parser(text).parse()
    except RecursionError as e:
        raise ParseError(TOO_DEEP) from e


def _variables(node: Node) -> set:
    if isinstance(node, Var):
        return {node.name}
    if isinstance(node, Num):
        return set()
    if isinstance(node, Neg):
        return _variables(node.operand)
    if isinstance(node, Group):
        return _variables(node.inner)
    if isinstance(node, Pow):
        return _variables(node.base) | _variables(node.exponent)
    return _variables(node.left) | _variables(node.right)


def _evaluate(node: Node) -> RatFun:
    if isinstance(node, Num):
        return RatFun.constant(node.value)
    if isinstance(node, Var):
        return RatFun.from_poly(Poly.x())
    if isinstance(node, Neg):
        return -_evaluate(node.operand)
    if isinstance(node, Group):
        return _evaluate(node.inner)
    if isinstance(node, Pow):
        if _variables(node.exponent):
            raise ParseError("non-integer exponent", node.position)
        exponent = _evaluate(node.exponent).num.coeff(0)
        if exponent.denominator != 1:
            raise ParseError("non-integer exponent", node.position)
        if exponent < 0:
            raise ParseError("negative exponent", node.position)
        return _evaluate(node.base) ** int(exponent)
    left, right = _evaluate(node.left), _evaluate(node.right)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    return left / right


def parse_expression(text: str) -> RatFun:
    """Parse a rational-function expression in one variable into canonical form.

    Raises:
        ParseError: On syntax errors, several variables, bad exponents or a zero denominator
    """
    node = parse_ast(text)
    try:
        names = _variables(node)
    except RecursionError as e:
        raise ParseError(TOO_DEEP) from e
    if len(names) > 1:
        raise ParseError(f"more than one variable: {', '.join(sorted(names))}")
    try:
        return _evaluate(node)
    except AlgebraError as e:
        raise ParseError(f"zero denominator: {e}") from e
    except RecursionError as e:
        raise ParseError(TOO_DEEP) from e


_NUMBER_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$", re.ASCII)


def _parse_value(token: str, line: Optional[int] = None, position: Optional[int] = None) -> Fraction:
    if not _NUMBER_RE.match(token):
        raise ParseError(f"malformed term {token!r}", position, line)
    try:
        return Fraction(token)
    except ZeroDivisionError as e:
        raise ParseError(f"zero denominator in {token!r}", position, line) from e


def _parse_list(text: str) -> List[Fraction]:
    body = text.strip()
    offset = len(text) - len(text.lstrip())
    if body.startswith("["):
        if not body.endswith("]"):
            raise ParseError("missing closing ']'", offset + len(body))
        body = body[1:-1]
        offset += 1
    terms = []
    for match in re.finditer(r"[^,\s]+", body):
        terms.append(_parse_value(match.group(), position=offset + match.start()))
    return terms


def _parse_bfile(text: str) -> List[Fraction]:
    entries: List[Tuple[int, Fraction]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"expected 'index value', got {line!r}", line=number)
        if not re.match(r"^[+-]?\d+$", fields[0], re.ASCII):
            raise ParseError(f"malformed index {fields[0]!r}", line=number)
        index = int(fields[0])
        if entries and index != entries[-1][0] + 1:
            raise ParseError(f"index {index} does not follow {entries[-1][0]}", line=number)
        entries.append((index, _parse_value(fields[1], line=number)))
    if entries and entries[0][0] != 0:
        logger.warning("b-file starts at index %d, re-basing to 0", entries[0][0])
    return [value for _, value in entries]


def parse_sequence(text: str, mode: str = "list") -> SequencePrefix:
    """Parse sequence terms.

    Args:
        text: Input text
        mode: "list" for comma or whitespace separated terms (optionally bracketed), "bfile" for
            OEIS b-file lines "index value"

    Returns:
        SequencePrefix: The terms, re-based at index 0

    Raises:
        ParseError: On malformed tokens, non-consecutive b-file indices or empty input
    """
    if mode == "list":
        terms = _parse_list(text)
    elif mode == "bfile":
        terms = _parse_bfile(text)
    else:
        raise ValueError(f"unknown sequence mode {mode!r}")
    if not terms:
        raise ParseError("empty input")
    return SequencePrefix(tuple(terms))
