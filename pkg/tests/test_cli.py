"""Unit tests for the CLI module."""

# pylint: disable=too-many-public-methods

import os
import random
import shutil
import tempfile
import unittest
from unittest.mock import MagicMock, patch

import yaml
from click.testing import CliRunner

from seqformula.cli import cli, run
from seqformula.guess import SequencePrefix
from seqformula.renderers import JsonRenderer
from tests.fixtures import (
    A226782_GF_TEXT,
    A226782_TERMS,
    A307717_GF_TEXT,
    A307717_TERMS,
    FIBONACCI_TERMS,
    a307717_representation,
    geometric_gf,
)


def _args(terms):
    return [str(t) for t in terms]


class TestCLI(unittest.TestCase):
    """Test cases for the command line interface."""

    def setUp(self):
        """Set up test fixtures."""
        self.runner = CliRunner()
        self.temp_dir = tempfile.mkdtemp()

        self.config = {"render": {"format": "formula"}, "fps": {"terms": 80}}
        self.config_path = os.path.join(self.temp_dir, "test_config.yaml")
        with open(self.config_path, "w", encoding="utf-8") as f:
            yaml.dump(self.config, f)

        self.rep_path = os.path.join(self.temp_dir, "a307717.json")
        with open(self.rep_path, "w", encoding="utf-8") as f:
            f.write(JsonRenderer().render(a307717_representation()))

    def tearDown(self):
        """Clean up test fixtures."""
        shutil.rmtree(self.temp_dir)

    def _write(self, name: str, content: str) -> str:
        path = os.path.join(self.temp_dir, name)
        with open(path, "w", encoding="utf-8") as f:
            f.write(content)
        return path

    def test_guess(self):
        """Test guessing from arguments, standard input and a b-file."""
        result = self.runner.invoke(cli, ["guess", "1", "1", "1", "1", "1"])
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.output, "1/(1-x)\n")

        result = self.runner.invoke(cli, ["guess"], input="[1, 1, 1, 1, 1]")
        self.assertEqual(result.output, "1/(1-x)\n")

        bfile = self._write("b.txt", "".join(f"{k} {v}\n" for k, v in enumerate(A226782_TERMS)))
        result = self.runner.invoke(cli, ["guess", "--bfile", bfile, "--var", "t"])
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.output, "(t^2+4*t^4-t^8)/(1-2*t^4+t^8)\n")

    def test_guess_failures(self):
        """Test exit codes for too few terms and malformed input."""
        result = self.runner.invoke(cli, ["guess", "1"])
        self.assertEqual(result.exit_code, 2)
        self.assertIn("error:", result.output)

        result = self.runner.invoke(cli, ["guess", "1", "two", "3"])
        self.assertEqual(result.exit_code, 4)

        result = self.runner.invoke(cli, ["guess", "--max-den", "0", "1", "2", "4", "8", "16"])
        self.assertEqual(result.exit_code, 2)

    def test_fps_formula(self):
        """Test the palindromic-squares formula from its terms."""
        result = self.runner.invoke(cli, ["fps", "--format", "formula"] + _args(A307717_TERMS))
        self.assertEqual(result.exit_code, 0)
        lines = result.output.splitlines()
        self.assertEqual(lines[0], "a(0) = 4")
        self.assertEqual(lines[1], "a(2n+1) = 0 for n >= 0")
        self.assertTrue(lines[2].startswith("a(2n) = ((-1)^n*n^3 - 9*(-1)^n*n^2"))
        self.assertTrue(lines[2].endswith(")/96 for n >= 1"))

    def test_fps_expression(self):
        """Test fps on an expression, with and without an expansion point."""
        result = self.runner.invoke(cli, ["fps", "--expr", "1/(1-x)"])
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.output, "Sum(x^n, n=0..infinity)\n")

        result = self.runner.invoke(cli, ["fps", "--expr", "1/((1-x)*(1-2*x))", "--point", "2", "--terms", "50"])
        self.assertEqual(result.exit_code, 0)

        result = self.runner.invoke(cli, ["fps", "--expr", "1/(1-x)", "--var", "z", "--idx", "k", "--format", "latex"])
        self.assertEqual(result.output, "\\sum_{k=0}^{\\infty} z^{k}\n")

    def test_fps_failures(self):
        """Test exit codes of fps."""
        result = self.runner.invoke(cli, ["fps"] + _args(FIBONACCI_TERMS))
        self.assertEqual(result.exit_code, 3)
        self.assertIn("error:", result.output)

        for expr in ("x^(1/2)", "1/x", "x+y", "-" * 5000 + "x", "(" * 3000 + "x" + ")" * 3000):
            result = self.runner.invoke(cli, ["fps", "--expr", expr])
            self.assertEqual(result.exit_code, 4, expr)

        result = self.runner.invoke(cli, ["fps", "--point", "1", "1", "1", "1"])
        self.assertEqual(result.exit_code, 4)

        result = self.runner.invoke(cli, ["fps", "--expr", "1/(1-x)", "--point", "1"])
        self.assertEqual(result.exit_code, 4)

        result = self.runner.invoke(cli, ["fps", "--expr", "1/(1-x)", "--format", "yaml"])
        self.assertEqual(result.exit_code, 4)

        result = self.runner.invoke(cli, ["fps", "--expr", "1/(1-x)", "--var", "n"])
        self.assertEqual(result.exit_code, 4)

    def test_terms_and_expression_agree(self):
        """Test that fps from terms and from the guessed expression print identical JSON."""
        guessed = self.runner.invoke(cli, ["guess"] + _args(A226782_TERMS))
        self.assertEqual(guessed.exit_code, 0)
        from_expr = self.runner.invoke(cli, ["fps", "--format", "json", "--expr", guessed.output.strip()])
        from_terms = self.runner.invoke(cli, ["fps", "--format", "json"] + _args(A226782_TERMS))
        self.assertEqual(from_expr.exit_code, 0)
        self.assertEqual(from_expr.output, from_terms.output)

    def test_verify(self):
        """Test verification against an expression and against terms."""
        result = self.runner.invoke(cli, ["verify", self.rep_path, "--expr", A307717_GF_TEXT])
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.output, "all 200 terms match\n")

        result = self.runner.invoke(cli, ["verify", self.rep_path, "--terms", "40", "--expr", A307717_GF_TEXT])
        self.assertEqual(result.output, "all 40 terms match\n")

        result = self.runner.invoke(cli, ["verify", self.rep_path] + _args(A307717_TERMS))
        self.assertEqual(result.output, "all 33 terms match\n")

        result = self.runner.invoke(cli, ["verify", self.rep_path, "--expr", A226782_GF_TEXT])
        self.assertEqual(result.exit_code, 1)
        self.assertEqual(result.output, "mismatch at index 0 (200 terms checked)\n")

        result = self.runner.invoke(cli, ["verify", self.rep_path, "4", "0", "2", "0", "6"])
        self.assertEqual(result.exit_code, 1)
        self.assertIn("mismatch at index 4", result.output)

    def test_verify_bad_file(self):
        """Test that unreadable or malformed representation files exit with 4."""
        result = self.runner.invoke(cli, ["verify", os.path.join(self.temp_dir, "missing.json"), "1"])
        self.assertEqual(result.exit_code, 4)
        broken = self._write("broken.json", '{"m": 0, "parts": []}')
        result = self.runner.invoke(cli, ["terms", broken])
        self.assertEqual(result.exit_code, 4)

    def test_terms(self):
        """Test printing terms of a saved representation."""
        result = self.runner.invoke(cli, ["terms", self.rep_path, "-n", "5"])
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.output, "4\n0\n2\n0\n5\n")

    def test_config_file(self):
        """Test that a config file changes the default format."""
        result = self.runner.invoke(cli, ["--config", self.config_path, "fps", "--expr", "1/(1-x)"])
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.output, "a(n) = 1 for n >= 0\n")

        result = self.runner.invoke(cli, ["--config", os.path.join(self.temp_dir, "none.yaml"), "guess", "1", "1"])
        self.assertEqual(result.exit_code, 4)
        self.assertIn("Config file not found", result.output)

        for content in ("[unclosed", "- just\n- a list\n"):
            broken = self._write("broken.yaml", content)
            result = self.runner.invoke(cli, ["--config", broken, "guess", "1", "1"])
            self.assertEqual(result.exit_code, 4, content)
            self.assertIn("error:", result.output)

    @patch("seqformula.cli.Pipeline")
    def test_pipeline_wiring(self, mock_pipeline_class):
        """Test that global options reach the pipeline."""
        mock_pipeline = MagicMock()
        mock_pipeline.config = {"render": {"var": "x"}}
        mock_pipeline.guess.return_value = geometric_gf()
        mock_pipeline_class.from_file.return_value = mock_pipeline

        result = self.runner.invoke(cli, ["--log-level", "INFO", "guess", "--guard", "1", "1", "1", "1"])

        self.assertEqual(result.exit_code, 0)
        self.assertEqual(result.output, "1/(1-x)\n")
        mock_pipeline_class.from_file.assert_called_once_with(None, "INFO")
        mock_pipeline.guess.assert_called_once_with(
            SequencePrefix((1, 1, 1)), guard_terms=1, max_num_degree=None, max_den_degree=None
        )

    def test_garbage_input(self):
        """Test that random non-numeric bytes always exit with 4."""
        rng = random.Random(1)
        alphabet = list(range(0x80, 0x100)) + list(b"abcxyz!?$%")
        for _ in range(100):
            data = bytes(rng.choice(alphabet) for _ in range(rng.randint(1, 40)))
            result = self.runner.invoke(cli, ["guess"], input=data)
            self.assertEqual(result.exit_code, 4, repr(data))

    def test_run(self):
        """Test the exit codes returned by run."""
        self.assertEqual(run(["guess", "1", "1", "1"]), 0)
        self.assertEqual(run(["guess", "1"]), 2)
        self.assertEqual(run(["fps"] + _args(FIBONACCI_TERMS)), 3)
        self.assertEqual(run(["verify", self.rep_path, "1", "2"]), 1)
        self.assertEqual(run(["fps", "--format", "yaml", "1"]), 4)
        self.assertEqual(run(["fps", "--format", "yaml", "--expr", "1/(1-x)"]), 4)
        self.assertEqual(run(["fps", "--degree-cap", "0"] + _args(A307717_TERMS)), 5)


if __name__ == "__main__":
    unittest.main()
