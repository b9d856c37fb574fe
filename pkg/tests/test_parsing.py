"""Unit tests for expression, sequence and b-file parsing."""

import random
import re
import unittest
from fractions import Fraction

from seqformula.algebra import Poly, RatFun
from seqformula.parsing import BinOp, Num, ParseError, Pow, parse_ast, parse_expression, parse_sequence, tokenize
from seqformula.renderers import render_ratfun
from tests.fixtures import (
    A226782_GF_TEXT,
    A307717_GF_TEXT,
    a226782_gf,
    a307717_gf,
    geometric_gf,
    random_ratfun,
)


class TestParseExpression(unittest.TestCase):
    """Test cases for rational-function expressions."""

    def test_known_functions(self):
        """Test generating functions written by hand."""
        self.assertEqual(parse_expression("1/(1-x)"), geometric_gf())
        self.assertEqual(parse_expression(A307717_GF_TEXT), a307717_gf())
        self.assertEqual(parse_expression(A226782_GF_TEXT), a226782_gf())
        self.assertEqual(parse_expression("1/(1-t)"), geometric_gf())

    def test_precedence(self):
        """Test operator precedence and associativity."""
        self.assertEqual(parse_expression("-x^2"), RatFun.from_poly(Poly((0, 0, -1))))
        self.assertEqual(parse_expression("2^3^2"), RatFun.constant(512))
        self.assertEqual(parse_expression("-2^2"), RatFun.constant(-4))
        self.assertEqual(parse_expression("1-2-3"), RatFun.constant(-4))
        self.assertEqual(parse_expression("8/2/2"), RatFun.constant(2))
        self.assertEqual(parse_expression("1.5*x"), RatFun.from_poly(Poly((0, Fraction(3, 2)))))
        self.assertEqual(parse_expression("x**2 + +1"), RatFun.from_poly(Poly((1, 0, 1))))
        self.assertEqual(parse_expression("(1+x)^0"), RatFun.constant(1))

    def test_syntax_tree(self):
        """Test the parsed tree shape."""
        node = parse_ast("1+x^2")
        self.assertIsInstance(node, BinOp)
        self.assertEqual(node.left, Num(Fraction(1)))
        self.assertIsInstance(node.right, Pow)
        self.assertEqual([t.kind for t in tokenize("x**2")], ["name", "op", "number", "end"])

    def test_errors(self):
        """Test that malformed expressions raise ParseError with a position."""
        cases = {
            "x^(1/2)": "non-integer exponent",
            "x^-1": "negative exponent",
            "x^x": "non-integer exponent",
            "2x": "implicit multiplication",
            "x+y": "more than one variable",
            "1/(x-x)": "zero denominator",
            "(1+x": "expected ')'",
            "1 $ 2": "unexpected character",
            "1+": "unexpected end of input",
        }
        for text, message in cases.items():
            with self.assertRaisesRegex(ParseError, re.escape(message), msg=text):
                parse_expression(text)
        with self.assertRaises(ParseError) as ctx:
            parse_expression("2x")
        self.assertEqual(ctx.exception.position, 1)

    def test_deep_nesting(self):
        """Test that moderate nesting parses and runaway nesting is a ParseError."""
        self.assertEqual(parse_expression("(" * 50 + "x" + ")" * 50), RatFun.from_poly(Poly.x()))
        self.assertEqual(parse_expression("-" * 50 + "x"), RatFun.from_poly(Poly.x()))
        for text in ("-" * 5000 + "x", "(" * 3000 + "x" + ")" * 3000, "x" + "^1" * 5000):
            with self.assertRaisesRegex(ParseError, "nested too deeply"):
                parse_expression(text)

    def test_render_round_trip(self):
        """Test that rendered functions parse back to themselves."""
        rng = random.Random(42)
        for _ in range(100):
            f = random_ratfun(rng)
            self.assertEqual(parse_expression(render_ratfun(f)), f)


class TestParseSequence(unittest.TestCase):
    """Test cases for inline lists and b-files."""

    def test_lists(self):
        """Test bracketed, comma and whitespace separated lists."""
        self.assertEqual(parse_sequence("[4, 0, 2, 0, 5]").terms, (4, 0, 2, 0, 5))
        self.assertEqual(parse_sequence("1 2 3/4 -5").terms, (1, 2, Fraction(3, 4), -5))
        self.assertEqual(parse_sequence(" 1,2,\n3 ").terms, (1, 2, 3))

    def test_list_errors(self):
        """Test malformed lists."""
        cases = (
            ("", "empty input"),
            ("1 a 3", "malformed term"),
            ("[1, 2", "missing closing"),
            ("1 1/0", "zero denominator"),
            ("1 \u0663", "malformed term"),
        )
        for text, message in cases:
            with self.assertRaisesRegex(ParseError, message, msg=text):
                parse_sequence(text)

    def test_bfile(self):
        """Test b-file parsing with comments and blank lines."""
        text = "# A226782\n0 0\n1 0\n\n2 1  # first nonzero\n3 0\n4 4\n"
        self.assertEqual(parse_sequence(text, "bfile").terms, (0, 0, 1, 0, 4))

    def test_bfile_rebase(self):
        """Test that b-files starting past zero are re-based with a warning."""
        with self.assertLogs("seqformula.stages.parsing", level="WARNING"):
            prefix = parse_sequence("1 5\n2 6\n3 7\n", "bfile")
        self.assertEqual(prefix.terms, (5, 6, 7))

    def test_bfile_errors(self):
        """Test non-consecutive indices and malformed lines."""
        with self.assertRaises(ParseError) as ctx:
            parse_sequence("0 1\n1 1\n3 2\n", "bfile")
        self.assertEqual(ctx.exception.line, 3)
        with self.assertRaisesRegex(ParseError, "expected 'index value'"):
            parse_sequence("0 1 2\n", "bfile")
        with self.assertRaisesRegex(ParseError, "malformed index"):
            parse_sequence("a 1\n", "bfile")
        with self.assertRaisesRegex(ParseError, "empty input"):
            parse_sequence("# nothing\n", "bfile")
        with self.assertRaises(ValueError):
            parse_sequence("1 2", "csv")


if __name__ == "__main__":
    unittest.main()
