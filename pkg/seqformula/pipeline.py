"""FPS pipeline: fit hypergeometric bases to sections and assemble series representations."""

from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

from omegaconf import OmegaConf

from seqformula.algebra import AlgebraError, RatFun, ratfun_translate, solve_linear
from seqformula.guess import GuessOptions, SequencePrefix, guess_rational, series_coeffs
from seqformula.hyper.sections import SearchOptions, mfold_search
from seqformula.hyper.terms import HyperTerm
from seqformula.representation import (
    Correction,
    ResiduePart,
    SeriesRepresentation,
    VerificationReport,
    WeightedTerm,
)
from seqformula.utils.logging import configure_logging, get_logger

DEFAULT_CONFIG_PATH = Path(__file__).parent / "conf" / "default.yaml"
DEFAULT_DEPTH = 200

logger = get_logger("pipeline")


class NoFit(Exception):
    """Raised when a basis does not reproduce a section or the assembled series."""


class NonAnalyticError(AlgebraError):
    """Raised when the generating function has a pole at the expansion point."""


def fit_combination(
    section_values: Sequence[Fraction], basis: Sequence[HyperTerm], n0: int, guard: int = 5
) -> List[Fraction]:
    """Exact weights w with sum_i w_i h_i(n) = section_values[n] for every supplied n >= n0.

    Args:
        section_values: Section coefficients b_0, b_1, ...
        basis: Hypergeometric terms
        n0: First index the combination must reproduce
        guard: Rows required beyond the |basis| solving rows

    Returns:
        List[Fraction]: One weight per basis term (free weights are zero)

    Raises:
        ValueError: If fewer than |basis| + n0 + guard values are supplied
        NoFit: If the system is inconsistent or a term is undefined on a used row
    """
    needed = len(basis) + n0 + guard
    if len(section_values) < needed:
        raise ValueError(f"fit needs {needed} section values, got {len(section_values)}")
    rows = []
    for n in range(n0, len(section_values)):
        row = [h(n) for h in basis]
        if any(v is None for v in row):
            raise NoFit(f"a basis term is undefined at n={n}")
        rows.append(row)
    weights = solve_linear(rows, [Fraction(v) for v in section_values[n0:]], len(basis))
    if weights is None:
        raise NoFit(f"basis of {len(basis)} terms does not span the section from n={n0}")
    return weights


def nth_term(rep: SeriesRepresentation, k: int) -> Fraction:
    """Coefficient a_k read from the representation."""
    return rep.formula_value(k) + rep.correction_map().get(k, Fraction(0))


def eval_representation(rep: SeriesRepresentation, count: int) -> List[Fraction]:
    """a_0 .. a_{count-1} from the parts and corrections."""
    corrections = rep.correction_map()
    return [rep.formula_value(k) + corrections.get(k, Fraction(0)) for k in range(count)]


def compare_terms(rep: SeriesRepresentation, terms: Sequence[Fraction]) -> VerificationReport:
    """Compare the representation with reference terms."""
    values = eval_representation(rep, len(terms))
    mismatch = next((k for k, (a, b) in enumerate(zip(values, terms)) if a != b), None)
    return VerificationReport(len(terms), mismatch)


def verify(rep: SeriesRepresentation, f: RatFun, count: int) -> VerificationReport:
    """Compare the representation with the exact series of f on count terms."""
    if not f.is_analytic_at_zero:
        raise NonAnalyticError("generating function is not analytic at 0")
    return compare_terms(rep, series_coeffs(f, count))


def _fit_section(
    j: int, g: RatFun, basis: Sequence[HyperTerm], span_start: int, order: int, guard: int
) -> ResiduePart:
    values = series_coeffs(g, span_start + len(basis) + order + guard)
    for n0 in range(span_start + 1):
        try:
            weights = fit_combination(values, basis, n0, guard)
        except NoFit:
            logger.debug("Residue %d: no fit from n0=%d", j, n0)
            continue
        terms = tuple(WeightedTerm(w, h) for w, h in zip(weights, basis) if w != 0)
        return ResiduePart(j, n0, terms)
    raise NoFit(f"residue {j}: basis does not fit from any start up to {span_start}")


def build_representation(
    f: RatFun,
    m_max: Optional[int] = None,
    depth: int = DEFAULT_DEPTH,
    point: Union[int, Fraction] = 0,
    options: Optional[SearchOptions] = None,
) -> SeriesRepresentation:
    """Hypergeometric-type representation of the Taylor series of f at `point`.

    Args:
        f: Rational generating function
        m_max: Largest interlacing modulus tried (default from default_modulus_bound)
        depth: Number of oracle terms the result is verified against
        point: Expansion point
        options: m-fold search knobs

    Returns:
        SeriesRepresentation: Verified representation

    Raises:
        NonAnalyticError: If f has a pole at the expansion point
        NoHypergeometricBasis: If no modulus up to m_max works
        NoFit: If the assembled representation fails verification
    """
    options = options or SearchOptions()
    if point:
        f = ratfun_translate(f, point)
    if not f.is_analytic_at_zero:
        raise NonAnalyticError(f"generating function has a pole at {point}")
    if f.is_zero:
        return SeriesRepresentation(1, (ResiduePart(0),))

    basis = mfold_search(f, m_max, options)
    m = basis.m
    parts = []
    for j, g in enumerate(basis.section_gfs):
        if g.is_zero:
            parts.append(ResiduePart(j))
            continue
        order = basis.recurrences[j].order
        parts.append(_fit_section(j, g, basis.per_residue[j], basis.span_starts[j], order, options.guard_rows))

    oracle = series_coeffs(f, m * max(p.start for p in parts) + m)
    corrections = []
    for part in parts:
        for n in range(part.start):
            k = m * n + part.residue
            delta = oracle[k] - part.value(n)
            if delta != 0:
                corrections.append(Correction(k, delta))
    rep = SeriesRepresentation(m, tuple(parts), tuple(corrections))

    report = verify(rep, f, depth)
    if not report.all_match:
        raise NoFit(f"representation disagrees with the series at index {report.first_mismatch}")
    logger.info("Representation with m=%d and %d corrections verified on %d terms", m, len(corrections), depth)
    return rep


class Pipeline:
    """Configured front door to guessing, representation and verification."""

    def __init__(self, config: Optional[Dict[str, Any]] = None) -> None:
        """Initialize the pipeline.

        Args:
            config: Settings merged over the packaged defaults
        """
        defaults = OmegaConf.load(DEFAULT_CONFIG_PATH)
        merged = OmegaConf.merge(defaults, OmegaConf.create(config or {}))
        self.config: Dict[str, Any] = OmegaConf.to_container(merged, resolve=True)
        configure_logging(self.config.get("log_level"), self.config.get("log_file"))
        self.logger = get_logger("pipeline", self.config.get("log_level"), self.config.get("log_file"))

    @classmethod
    def from_file(cls, config_path: Optional[str] = None, log_level: Optional[str] = None) -> "Pipeline":
        """Build a pipeline from an optional user YAML file.

        Args:
            config_path: Path of a YAML file merged over the defaults
            log_level: Overrides the configured log level

        Returns:
            Pipeline: The configured pipeline
        """
        config = cls._load_config(config_path) if config_path else {}
        if log_level:
            config["log_level"] = log_level
        return cls(config)

    @staticmethod
    def _load_config(config_path: str) -> Dict[str, Any]:
        """Load configuration from file.

        Args:
            config_path: Path to the configuration file

        Returns:
            Dict[str, Any]: Configuration dictionary

        Raises:
            FileNotFoundError: If the config file doesn't exist
            ValueError: If the config is invalid
        """
        path = Path(config_path)
        if not path.exists():
            raise FileNotFoundError(f"Config file not found: {config_path}")
        try:
            config = OmegaConf.to_container(OmegaConf.load(path), resolve=True)
        except Exception as e:
            raise ValueError(f"Failed to load config: {e}") from e
        if config is None:
            return {}
        if not isinstance(config, dict):
            raise ValueError(f"Config must be a mapping, got {type(config).__name__}")
        return config

    def _section(self, name: str, overrides: Dict[str, Any]) -> Dict[str, Any]:
        section = dict(self.config.get(name) or {})
        section.update({k: v for k, v in overrides.items() if v is not None})
        return section

    def guess_options(self, **overrides) -> GuessOptions:
        section = self._section("guess", overrides)
        return GuessOptions(section.get("max_num_degree"), section.get("max_den_degree"), section.get("guard_terms", 0))

    def search_options(self, **overrides) -> SearchOptions:
        section = self._section("fps", overrides)
        factor_cap = self._section("algebra", {}).get("factor_degree_cap", SearchOptions.factor_degree_cap)
        return SearchOptions(
            m_max=section.get("m_max"),
            degree_cap=section.get("degree_cap", SearchOptions.degree_cap),
            guard_rows=section.get("guard_rows", SearchOptions.guard_rows),
            start_cap=section.get("start_cap", SearchOptions.start_cap),
            factor_degree_cap=factor_cap,
        )

    def depth(self, override: Optional[int] = None) -> int:
        return override if override is not None else self._section("fps", {}).get("terms", DEFAULT_DEPTH)

    def guess(self, prefix: Union[SequencePrefix, Sequence], **overrides) -> RatFun:
        """Guess the generating function of a sequence prefix."""
        f = guess_rational(prefix, self.guess_options(**overrides))
        self.logger.info("Guessed generating function with degrees (%d, %d)", f.num.degree, f.den.degree)
        return f

    def represent(self, f: RatFun, point: Union[int, Fraction] = 0, depth: Optional[int] = None, **overrides):
        """Series representation of f, verified to the configured depth."""
        options = self.search_options(**overrides)
        return build_representation(f, options.m_max, self.depth(depth), point, options)

    def check(self, rep: SeriesRepresentation, f: RatFun, depth: Optional[int] = None) -> VerificationReport:
        """Verify a representation against the series of f."""
        return verify(rep, f, self.depth(depth))

