"""One function per run mode

Each command takes a validated ExperimentConfig and returns the report to
emit. Commands raise EuclabError subclasses; the entry point maps them to
exit codes.
"""

from app.census import check_census, exact_distribution
from app.estimator import BoundReport, analyze
from app.exceptions import VerificationFailure
from app.experiment import ExperimentConfig, Report
from app.factorpat import build_with_pattern, parse_pattern_spec
from app.field import FieldCtx, ff_make
from app.genlead import GenericLeadReport, generic_lead, measure_normalization
from app.logger import get_logger
from app.montecarlo import SampleReport, monte_carlo
from app.polyring import Poly, TraceReport, euclid_trace, poly_parse
from app.settings import get_settings
from app.tables import TableReport, get_table, run_table
from app.verify import VerifyReport, run_suites

logger = get_logger("cli")


def _seed(config: ExperimentConfig) -> int:
    return get_settings().sampling.seed if config.seed is None else config.seed


def resolve_field(config: ExperimentConfig) -> FieldCtx:
    return ff_make(config.q)


def resolve_g(config: ExperimentConfig, ctx: FieldCtx) -> Poly:
    """g from --g coefficients, or built from --pattern with the run seed"""
    if config.pattern is not None:
        return build_with_pattern(ctx, parse_pattern_spec(config.pattern), _seed(config))
    return poly_parse(ctx, config.g)


def cmd_analyze(config: ExperimentConfig) -> BoundReport:
    """Factorization profile, main terms and every bound for g"""
    ctx = resolve_field(config)
    report = analyze(resolve_g(config, ctx), config.d)
    if report.flags.k_exceeds_d:
        logger.info("k exceeds d, every f is coprime to g", k=report.profile.k, d=config.d)
    return report


def cmd_census(config: ExperimentConfig) -> Report:
    """Exact distribution over all monic f, cross-checked against the bounds"""
    ctx = resolve_field(config)
    g = resolve_g(config, ctx)
    census = exact_distribution(g, config.d, cap=config.cap, workers=config.workers)
    violations = check_census(analyze(g, config.d), census)
    for violation in violations:
        logger.warning("Bound violated", detail=violation)
    return census.model_copy(update={"bound_violations": violations})


def cmd_sample(config: ExperimentConfig) -> SampleReport:
    ctx = resolve_field(config)
    return monte_carlo(
        resolve_g(config, ctx),
        config.d,
        n=config.n,
        seed=_seed(config),
        workers=config.workers,
        enumeration=config.enumeration,
        cap=config.cap,
    )


def cmd_table(config: ExperimentConfig) -> TableReport:
    """Run every row of a preset; --n overrides the preset sample size"""
    return run_table(
        get_table(config.table),
        n=config.n,
        seed=_seed(config),
        workers=config.workers,
        eps1=config.eps1,
    )


def cmd_verify(config: ExperimentConfig) -> VerifyReport:
    """
    Run verification suites

    Raises:
        VerificationFailure: If any suite reports a failure; the report is
            attached as details["report"]
    """
    report = run_suites(config.suites, _seed(config), config.trials)
    if not report.passed:
        raise VerificationFailure(f"{report.total_failures} check(s) failed", report=report)
    return report


def cmd_schur(config: ExperimentConfig) -> GenericLeadReport:
    """
    G_1..G_d for g (made monic), their measured normalization against the
    Euclid chain, and with --f their values at that f
    """
    ctx = resolve_field(config)
    g = resolve_g(config, ctx).monic()
    lead_set = generic_lead(g, config.d)
    measure_normalization(lead_set, seed=_seed(config))
    evaluation = None
    if config.f is not None:
        evaluation = lead_set.evaluate_at(poly_parse(ctx, config.f))
        logger.info(
            "Lead values at f",
            f=evaluation.f,
            generic=evaluation.generic,
            consistent=evaluation.consistent,
        )
    return lead_set.to_report(evaluation)


def cmd_trace(config: ExperimentConfig) -> TraceReport:
    ctx = resolve_field(config)
    return euclid_trace(resolve_g(config, ctx), poly_parse(ctx, config.f)).to_report()


COMMANDS = {
    "analyze": cmd_analyze,
    "census": cmd_census,
    "sample": cmd_sample,
    "table": cmd_table,
    "verify": cmd_verify,
    "schur": cmd_schur,
    "trace": cmd_trace,
}


def run_command(config: ExperimentConfig) -> Report:
    """Dispatch on config.mode"""
    command = COMMANDS.get(config.mode)
    if command is None:
        raise ValueError(f"Unknown mode '{config.mode}'")
    logger.info("Command started", mode=config.mode)
    report = command(config)
    logger.info("Command completed", mode=config.mode, kind=report.kind)
    return report

