"""Command line interface for seqformula."""

import traceback
from fractions import Fraction
from typing import Callable, List, Optional, Sequence

import click

from seqformula.algebra import DegreeCapExceeded, RatFun
from seqformula.guess import NoGuess, SequencePrefix
from seqformula.hyper.sections import NoHypergeometricBasis
from seqformula.parsing import ParseError, parse_expression, parse_sequence
from seqformula.pipeline import NonAnalyticError, Pipeline, compare_terms, eval_representation
from seqformula.renderers import FORMATS, RenderOptions, parse_json, render, render_ratfun
from seqformula.representation import SeriesRepresentation, VerificationReport
from seqformula.utils.logging import get_logger

# Order matters: the first matching class wins.
EXIT_CODES = (
    (NoGuess, 2),
    (NoHypergeometricBasis, 3),
    (DegreeCapExceeded, 5),
    (ParseError, 4),
    (NonAnalyticError, 4),
    (UnicodeDecodeError, 4),
    (OSError, 4),
)
EXIT_MISMATCH = 1
EXIT_BAD_INPUT = 4


def _exit_code(error: Exception) -> Optional[int]:
    return next((code for cls, code in EXIT_CODES if isinstance(error, cls)), None)


def _run(ctx: click.Context, action: Callable):
    """Run an action, turning known failures into exit codes."""
    logger = get_logger("cli")
    try:
        return action()
    except tuple(cls for cls, _ in EXIT_CODES) as e:
        code = _exit_code(e)
        logger.debug("Exit %d: %s", code, traceback.format_exc())
        click.echo(f"error: {e}", err=True)
        ctx.exit(code)
    except Exception as e:
        logger.error("Unexpected error: %s", e)
        logger.error("Stack trace:")
        logger.error(traceback.format_exc())
        raise
    return None


def _read_source(path: Optional[str]) -> str:
    """Read UTF-8 text from a file, or from standard input for None or '-'."""
    if path is None or path == "-":
        data = click.get_binary_stream("stdin").read()
    else:
        with open(path, "rb") as f:
            data = f.read()
    return data.decode("utf-8")


def _read_prefix(terms: Sequence[str], bfile: Optional[str]) -> SequencePrefix:
    if bfile is not None:
        return parse_sequence(_read_source(bfile), "bfile")
    if terms:
        return parse_sequence(" ".join(terms), "list")
    return parse_sequence(_read_source(None), "list")


def _parse_point(text: Optional[str]) -> Fraction:
    if text is None:
        return Fraction(0)
    value = parse_expression(text)
    if value.num.degree > 0 or value.den.degree > 0:
        raise ParseError(f"expansion point must be a constant, got {text!r}")
    return value.num.coeff(0)


def _read_representation(path: str) -> SeriesRepresentation:
    return parse_json(_read_source(path))


def _report_text(report: VerificationReport) -> str:
    if report.all_match:
        return f"all {report.checked_terms} terms match"
    return f"mismatch at index {report.first_mismatch} ({report.checked_terms} terms checked)"


def _guess_overrides(guard, max_num, max_den):
    return {"guard_terms": guard, "max_num_degree": max_num, "max_den_degree": max_den}


input_arguments = [
    click.argument("terms", nargs=-1),
    click.option("--bfile", type=click.Path(dir_okay=False), default=None, help="OEIS b-file with the terms"),
]

budget_options = [
    click.option("--guard", type=click.IntRange(min=0), default=None, help="Held-out terms the guess must match"),
    click.option("--max-num", type=click.IntRange(min=0), default=None, help="Numerator degree budget"),
    click.option("--max-den", type=click.IntRange(min=0), default=None, help="Denominator degree budget"),
]


def with_sequence_arguments(command):
    for decorator in reversed(input_arguments + budget_options):
        command = decorator(command)
    return command


class SeqformulaGroup(click.Group):
    """Click group whose usage errors exit with the bad-input code instead of click's 2."""

    def make_context(self, info_name, args, parent=None, **extra):
        try:
            return super().make_context(info_name, args, parent=parent, **extra)
        except click.UsageError as e:
            e.exit_code = EXIT_BAD_INPUT
            raise

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = EXIT_BAD_INPUT
            raise


@click.group(cls=SeqformulaGroup)
@click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None, help="YAML settings file")
@click.option("--log-level", default=None, help="DEBUG, INFO, WARNING, ERROR or CRITICAL")
@click.pass_context
def cli(ctx: click.Context, config_path: Optional[str], log_level: Optional[str]):
    """Find closed-form formulas for sequences with rational generating functions.

    Sequences are read from the TERMS arguments, a b-file or standard input.
    """
    try:
        ctx.obj = Pipeline.from_file(config_path, log_level)
    except (OSError, ValueError) as e:
        click.echo(f"error: {e}", err=True)
        ctx.exit(EXIT_BAD_INPUT)


@cli.command()
@with_sequence_arguments
@click.option("--var", default=None, help="Series variable")
@click.pass_context
def guess(ctx: click.Context, terms, bfile, guard, max_num, max_den, var):
    """Guess the rational generating function of a sequence."""
    pipeline: Pipeline = ctx.obj

    def action():
        prefix = _read_prefix(terms, bfile)
        f = pipeline.guess(prefix, **_guess_overrides(guard, max_num, max_den))
        click.echo(render_ratfun(f, var or pipeline.config["render"]["var"]))

    _run(ctx, action)


@cli.command()
@with_sequence_arguments
@click.option("--expr", default=None, help="Rational generating function, e.g. '1/(1-x)'")
@click.option("--point", default=None, help="Expansion point for --expr")
@click.option("--format", "fmt", type=click.Choice(FORMATS), default=None, help="Output format")
@click.option("--terms", "depth", type=click.IntRange(min=1), default=None, help="Verification depth")
@click.option("--mmax", type=click.IntRange(min=1), default=None, help="Largest interlacing modulus")
@click.option("--degree-cap", type=click.IntRange(min=0), default=None, help="Polynomial solution degree cap")
@click.option("--var", default=None, help="Series variable")
@click.option("--idx", default=None, help="Summation index")
@click.pass_context
def fps(  # pylint: disable=too-many-arguments
    ctx: click.Context, terms, bfile, guard, max_num, max_den, expr, point, fmt, depth, mmax, degree_cap, var, idx
):
    """Compute the hypergeometric-type series representation."""
    pipeline: Pipeline = ctx.obj
    settings = pipeline.config["render"]
    if point is not None and expr is None:
        raise click.UsageError("--point needs --expr")
    try:
        options = RenderOptions(fmt or settings["format"], var or settings["var"], idx or settings["idx"])
    except ValueError as e:
        raise click.UsageError(str(e)) from e

    def action():
        if expr is not None:
            f: RatFun = parse_expression(expr)
        else:
            f = pipeline.guess(_read_prefix(terms, bfile), **_guess_overrides(guard, max_num, max_den))
        rep = pipeline.represent(f, _parse_point(point), depth, m_max=mmax, degree_cap=degree_cap)
        click.echo(render(rep, options))

    _run(ctx, action)


@cli.command(name="verify")
@click.argument("repfile")
@click.argument("terms", nargs=-1)
@click.option("--bfile", type=click.Path(dir_okay=False), default=None, help="OEIS b-file with the terms")
@click.option("--expr", default=None, help="Rational generating function to check against")
@click.option("--terms", "depth", type=click.IntRange(min=1), default=None, help="Number of series terms checked")
@click.pass_context
def verify_command(ctx: click.Context, repfile, terms, bfile, expr, depth):
    """Check a JSON representation against a function or against given terms (exit 1 on mismatch)."""
    pipeline: Pipeline = ctx.obj

    def action() -> VerificationReport:
        rep = _read_representation(repfile)
        if expr is not None:
            report = pipeline.check(rep, parse_expression(expr), depth)
        else:
            report = compare_terms(rep, list(_read_prefix(terms, bfile).terms))
        click.echo(_report_text(report))
        return report

    report = _run(ctx, action)
    if report is not None and not report.all_match:
        ctx.exit(EXIT_MISMATCH)


@cli.command(name="terms")
@click.argument("repfile")
@click.option("-n", "--count", type=click.IntRange(min=0), default=20, help="Number of terms")
@click.pass_context
def terms_command(ctx: click.Context, repfile, count):
    """Print the first terms of a JSON representation, one per line."""

    def action():
        for value in eval_representation(_read_representation(repfile), count):
            click.echo(str(value))

    _run(ctx, action)


def run(argv: Optional[List[str]] = None) -> int:
    """Run the command line and return its exit code."""
    try:
        result = cli.main(args=argv, prog_name="seqformula", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        return 1
    return result if isinstance(result, int) else 0
