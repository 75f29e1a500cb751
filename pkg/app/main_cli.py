import argparse
import sys
from typing import List, Optional

from app.exceptions import EuclabError, VerificationFailure
from app.logger import set_level
from app.settings import get_settings

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="euclab",
        description="euclab - average-case behaviour of the Euclidean algorithm over F_q[T]",
    )
    parser.add_argument(
        "--mode",
        type=str,
        default="analyze",
        help="analyze, census, sample, table, verify, schur or trace (default: analyze)",
    )
    parser.add_argument("--q", type=int, default=None, help="Field size (prime)")
    parser.add_argument("--e", type=int, default=None, help="Degree of g (cross-check only)")
    parser.add_argument("--d", type=int, default=None, help="Degree of the monic f")
    parser.add_argument(
        "--g", type=str, default=None, help="g as ascending coefficients, e.g. '5,2,0,1'"
    )
    parser.add_argument(
        "--pattern",
        type=str,
        default=None,
        help="Build g from a factorization pattern, e.g. '1^1x7' or '2^1x2,5^1x1'",
    )
    parser.add_argument(
        "--f", type=str, default=None, help="f for trace mode, or the point for schur mode"
    )
    parser.add_argument(
        "--n", type=int, default=None, help="Sample size (default: EUCLAB_SAMPLES or the preset)"
    )
    parser.add_argument(
        "--seed", type=int, default=None, help="Master seed (default: EUCLAB_SEED)"
    )
    parser.add_argument(
        "--cap", type=int, default=None, help="Largest census size q^d (default: EUCLAB_CAP)"
    )
    parser.add_argument(
        "--workers",
        type=int,
        default=None,
        help="Worker processes (capped by EUCLAB_THREADS)",
    )
    parser.add_argument(
        "--enumerate",
        action="store_true",
        help="Sample mode: visit every monic f exactly once instead of sampling",
    )
    parser.add_argument(
        "--eps1",
        type=str,
        default=None,
        help="Error for the mean: rel or abs (default: rel, or the table preset's)",
    )
    parser.add_argument("--table", type=str, default=None, help="Table preset for table mode")
    parser.add_argument(
        "--suite",
        action="append",
        default=[],
        help="Verification suite (repeatable; default: every suite)",
    )
    parser.add_argument(
        "--trials", type=int, default=None, help="Trials per suite (default: per suite)"
    )
    parser.add_argument(
        "--format",
        type=str,
        default=None,
        help="json or csv (default: from the --out suffix, else EUCLAB_FORMAT)",
    )
    parser.add_argument("--out", type=str, default=None, help="Write the report to FILE")
    parser.add_argument(
        "--log-level",
        type=str,
        choices=LOG_LEVELS,
        default=None,
        help="Logging level for all components (default: EUCLAB_LOG_LEVEL)",
    )
    parser.add_argument("--list-tables", action="store_true", help="List table presets")
    parser.add_argument("--list-suites", action="store_true", help="List verification suites")
    parser.add_argument("--list-formats", action="store_true", help="List output formats")
    return parser


def _print_listing(entries: dict[str, str]) -> None:
    width = max(len(name) for name in entries)
    for name, description in entries.items():
        print(f"{name.ljust(width)}  {description}")


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run euclab

    Returns:
        0 on success, 1 on usage errors, 2 on verification failures,
        3 on infeasible or too-large requests
    """
    args = build_parser().parse_args(argv)

    try:
        settings = get_settings()
    except ValueError as e:
        print(f"error: configuration: {str(e)}", file=sys.stderr)
        return 1
    if args.log_level:
        settings.log.level = args.log_level
        set_level(args.log_level)

    # module-level loggers read the level on import
    from app.cli import run_command
    from app.experiment import ExperimentConfig
    from app.handlers import list_handlers_with_descriptions
    from app.render import ReportRenderer
    from app.tables import list_tables_with_descriptions
    from app.validation import ExperimentConfigValidator
    from app.verify import list_suites_with_descriptions

    listings = [
        (args.list_tables, list_tables_with_descriptions),
        (args.list_suites, list_suites_with_descriptions),
        (args.list_formats, list_handlers_with_descriptions),
    ]
    if any(flag for flag, _ in listings):
        for flag, describe in listings:
            if flag:
                _print_listing(describe())
        return 0

    config = ExperimentConfig(
        mode=args.mode,
        q=args.q,
        e=args.e,
        d=args.d,
        g=args.g,
        pattern=args.pattern,
        f=args.f,
        n=args.n,
        seed=args.seed,
        cap=args.cap,
        workers=args.workers,
        enumeration=args.enumerate,
        eps1=args.eps1,
        table=args.table,
        suites=args.suite,
        trials=args.trials,
        format=args.format,
        out=args.out,
    )
    result = ExperimentConfigValidator().validate(config)
    if not result.is_valid:
        print(result.get_error_summary(), file=sys.stderr)
        return 1

    renderer = ReportRenderer()
    try:
        report = run_command(config)
        renderer.render(report, config.format, config.out)
        return 0
    except VerificationFailure as e:
        failed = e.details.get("report")
        if failed is not None:
            renderer.render(failed, config.format, config.out)
        print(f"error: verification failed: {e.message}", file=sys.stderr)
        return e.exit_code
    except EuclabError as e:
        print(f"error: {type(e).__name__}: {e.message}", file=sys.stderr)
        return e.exit_code
    except (ValueError, RuntimeError) as e:
        print(f"error: {str(e)}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
