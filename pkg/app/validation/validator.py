from difflib import get_close_matches
from typing import Callable, List, Optional

from sympy import isprime, nextprime

from app.exceptions import ParseError
from app.experiment import EPS1_MODES, MODES, ExperimentConfig
from app.factorpat import parse_pattern_spec, pattern_degree
from app.handlers import list_handlers
from app.tables import list_tables
from app.validation.models import ValidationError, ValidationResult
from app.verify import DEFAULT_SUITE, list_suites


def _coefficient_degree(text: str) -> Optional[int]:
    """Degree of an ascending coefficient list over Z, None if not parseable"""
    try:
        values = [int(token.strip()) for token in text.split(",")]
    except ValueError:
        return None
    nonzero = [i for i, v in enumerate(values) if v != 0]
    return nonzero[-1] if nonzero else -1


class ExperimentConfigValidator:
    """Validates ExperimentConfig with helpful error messages and suggestions"""

    def __init__(self):
        self.valid_modes = list(MODES)
        self.valid_formats = list_handlers()
        self.valid_tables = list_tables()
        self.valid_suites = list_suites() + [DEFAULT_SUITE]

    def validate(self, config: ExperimentConfig) -> ValidationResult:
        """
        Validate a run configuration

        Every check runs even when an earlier one fails, so the summary
        lists all problems at once.
        """
        errors: List[ValidationError] = []
        checks: List[tuple[str, Callable[[ExperimentConfig], List[ValidationError]]]] = [
            ("mode", self._validate_mode),
            ("q", self._validate_field),
            ("g", self._validate_polynomial),
            ("d", self._validate_degrees),
            ("n", self._validate_counts),
            ("format", self._validate_choices),
            ("table", self._validate_table),
            ("suite", self._validate_suites),
        ]

        for field, check in checks:
            try:
                errors.extend(check(config))
            except Exception as e:
                errors.append(
                    ValidationError(
                        field=field,
                        message=f"Error validating {field}: {str(e)}",
                        received_value=getattr(config, field, None),
                        expected=f"A valid value for --{field}",
                        suggestions=["Run with --help to see the accepted values"],
                    )
                )

        return ValidationResult(is_valid=len(errors) == 0, errors=errors)

    def _validate_mode(self, config: ExperimentConfig) -> List[ValidationError]:
        if config.mode in self.valid_modes:
            return []
        return [
            ValidationError(
                field="mode",
                message=f"Invalid mode '{config.mode}'",
                received_value=config.mode,
                expected=f"One of: {', '.join(self.valid_modes)}",
                suggestions=[
                    "Use 'analyze' for the bound report of g",
                    "Use 'census' for the exact distribution over all monic f",
                    "Use 'sample' for a seeded Monte-Carlo run",
                    f"Did you mean '{self._find_closest_match(config.mode, self.valid_modes)}'?",
                ],
            )
        ]

    def _validate_field(self, config: ExperimentConfig) -> List[ValidationError]:
        if not config.needs_g:
            return []
        if config.q is None:
            return [
                ValidationError(
                    field="q",
                    message=f"Mode '{config.mode}' needs the field size",
                    received_value=None,
                    expected="A prime q",
                    suggestions=["Example: --q 67"],
                )
            ]
        if config.q < 2 or not isprime(config.q):
            return [
                ValidationError(
                    field="q",
                    message=f"q must be prime, got {config.q}",
                    received_value=config.q,
                    expected="A prime q >= 2",
                    suggestions=[f"Nearest larger prime: {nextprime(config.q)}"],
                )
            ]
        return []

    def _validate_polynomial(self, config: ExperimentConfig) -> List[ValidationError]:
        errors: List[ValidationError] = []
        if not config.needs_g:
            return errors

        if config.g is None and config.pattern is None:
            errors.append(
                ValidationError(
                    field="g",
                    message=f"Mode '{config.mode}' needs g",
                    received_value=None,
                    expected="--g 'c0,c1,...,ce' or --pattern 'deg^mult x count,...'",
                    suggestions=["Example: --g 0,0,0,1", "Example: --pattern 1^1x1,6^1x1"],
                )
            )
        elif config.g is not None and config.pattern is not None:
            errors.append(
                ValidationError(
                    field="g",
                    message="Give either --g or --pattern, not both",
                    received_value={"g": config.g, "pattern": config.pattern},
                    expected="Exactly one description of g",
                    suggestions=["Drop --pattern to use the explicit coefficients"],
                )
            )
        elif config.g is not None and _coefficient_degree(config.g) is None:
            errors.append(
                ValidationError(
                    field="g",
                    message="g must be a comma-separated list of integers",
                    received_value=config.g,
                    expected="Ascending coefficients c0,c1,...,ce",
                    suggestions=["Example: --g 5,2,0,1 is T^3 + 2T + 5"],
                )
            )
        elif config.pattern is not None:
            try:
                parse_pattern_spec(config.pattern)
            except ParseError as e:
                errors.append(
                    ValidationError(
                        field="pattern",
                        message=e.message,
                        received_value=config.pattern,
                        expected="term(,term)* with term = degree[^multiplicity][x count]",
                        suggestions=["Example: --pattern 1^1x7", "Example: --pattern 2^1x2,5^1x1"],
                    )
                )

        if config.mode == "trace" and config.f is None:
            errors.append(
                ValidationError(
                    field="f",
                    message="Mode 'trace' needs f",
                    received_value=None,
                    expected="--f 'c0,c1,...,cd'",
                    suggestions=["Example: --f 1,1 is T + 1"],
                )
            )
        if config.f is not None and _coefficient_degree(config.f) is None:
            errors.append(
                ValidationError(
                    field="f",
                    message="f must be a comma-separated list of integers",
                    received_value=config.f,
                    expected="Ascending coefficients c0,c1,...,cd",
                    suggestions=["Example: --f 1,1 is T + 1"],
                )
            )
        return errors

    def _degree_of_g(self, config: ExperimentConfig) -> Optional[int]:
        if config.g is not None:
            degree = _coefficient_degree(config.g)
            if degree is not None and config.q and isprime(config.q):
                values = [int(t) % config.q for t in config.g.split(",")]
                nonzero = [i for i, v in enumerate(values) if v]
                return nonzero[-1] if nonzero else -1
            return degree
        if config.pattern is not None:
            try:
                return pattern_degree(parse_pattern_spec(config.pattern))
            except ParseError:
                return None
        return config.e

    def _validate_degrees(self, config: ExperimentConfig) -> List[ValidationError]:
        errors: List[ValidationError] = []
        if not config.needs_g:
            return errors

        e = self._degree_of_g(config)
        if config.e is not None and e is not None and config.e != e:
            errors.append(
                ValidationError(
                    field="e",
                    message=f"--e {config.e} disagrees with deg g = {e}",
                    received_value=config.e,
                    expected=f"{e}, or omit --e",
                    suggestions=["e is derived from g; --e is only a cross-check"],
                )
            )

        d = config.d
        if config.mode == "trace":
            d = _coefficient_degree(config.f) if config.f is not None else None
            if d is None:
                return errors
        elif d is None:
            errors.append(
                ValidationError(
                    field="d",
                    message=f"Mode '{config.mode}' needs the degree of f",
                    received_value=None,
                    expected="An integer 1 <= d < e",
                    suggestions=["Example: --d 3"],
                )
            )
            return errors

        if e is not None and not 1 <= d < e:
            errors.append(
                ValidationError(
                    field="d" if config.mode != "trace" else "f",
                    message=f"Degrees must satisfy e > d >= 1, got e={e}, d={d}",
                    received_value=d,
                    expected=f"1 <= d <= {max(e - 1, 1)}",
                    suggestions=["Lower d or use a g of higher degree"],
                )
            )
        if config.mode == "schur" and config.f is not None:
            f_degree = _coefficient_degree(config.f)
            if f_degree is not None and f_degree != d:
                errors.append(
                    ValidationError(
                        field="f",
                        message=f"f must have degree d={d}, got {f_degree}",
                        received_value=config.f,
                        expected=f"A monic polynomial of degree {d}",
                        suggestions=["Drop --f to report the generic lead set only"],
                    )
                )
        return errors

    def _validate_counts(self, config: ExperimentConfig) -> List[ValidationError]:
        errors: List[ValidationError] = []
        for field in ("n", "cap", "trials", "workers"):
            value = getattr(config, field)
            if value is not None and value < 1:
                errors.append(
                    ValidationError(
                        field=field,
                        message=f"--{field} must be >= 1, got {value}",
                        received_value=value,
                        expected="A positive integer",
                        suggestions=[f"Omit --{field} to use the configured default"],
                    )
                )
        if config.seed is not None and config.seed < 0:
            errors.append(
                ValidationError(
                    field="seed",
                    message=f"--seed must be non-negative, got {config.seed}",
                    received_value=config.seed,
                    expected="An integer in [0, 2^64)",
                    suggestions=["Example: --seed 20240101"],
                )
            )
        return errors

    def _validate_choices(self, config: ExperimentConfig) -> List[ValidationError]:
        errors: List[ValidationError] = []
        if config.format is not None and config.format not in self.valid_formats:
            closest = self._find_closest_match(config.format, self.valid_formats)
            errors.append(
                ValidationError(
                    field="format",
                    message=f"Invalid output format '{config.format}'",
                    received_value=config.format,
                    expected=f"One of: {', '.join(self.valid_formats)}",
                    suggestions=[f"Did you mean '{closest}'?"],
                )
            )
        if config.eps1 is not None and config.eps1 not in EPS1_MODES:
            errors.append(
                ValidationError(
                    field="eps1",
                    message=f"Invalid error mode '{config.eps1}'",
                    received_value=config.eps1,
                    expected="rel or abs",
                    suggestions=["Use 'abs' when E_g is tiny (k >= 2 rows)"],
                )
            )
        return errors

    def _validate_table(self, config: ExperimentConfig) -> List[ValidationError]:
        if config.mode != "table":
            return []
        if config.table in self.valid_tables:
            return []
        return [
            ValidationError(
                field="table",
                message=f"Unknown table '{config.table}'",
                received_value=config.table,
                expected=f"One of: {', '.join(self.valid_tables)}",
                suggestions=["Run with --list-tables to see the presets"],
            )
        ]

    def _validate_suites(self, config: ExperimentConfig) -> List[ValidationError]:
        errors: List[ValidationError] = []
        for name in config.suites:
            if name.lower() not in self.valid_suites:
                errors.append(
                    ValidationError(
                        field="suite",
                        message=f"Unknown suite '{name}'",
                        received_value=name,
                        expected=f"One of: {', '.join(self.valid_suites)}",
                        suggestions=[
                            f"Did you mean '{self._find_closest_match(name, self.valid_suites)}'?"
                        ],
                    )
                )
        return errors

    def _find_closest_match(self, value: str, options: List[str]) -> str:
        """Closest option by string similarity, first option as fallback"""
        if not options:
            return ""
        matches = get_close_matches(value.lower(), options, n=1, cutoff=0.0)
        return matches[0] if matches else options[0]
