# commands/verify.py - Runs verification suites and reports every failure
from commands.arguments import nonnegative_int, positive_int
from commands.router import CommandRouter, Option
from core.config import settings
from core.logging_system import ErrorCategory, cli_logger, error_context, log_and_handle_error
from core.models import OutputDocument, SuiteRanges, to_wire
from middleware.grid_guard import grid_guard
from algebra.identities import SUITE_NAMES, SUITES, run_suite

router = CommandRouter()


@router.command(
    "verify",
    help="check an identity suite over a parameter grid; exit 1 on any failure",
    options=(
        Option.of("suite", choices=SUITE_NAMES, metavar="SUITE", help="one of: " + ", ".join(SUITE_NAMES)),
        Option.of("--n-max", type=nonnegative_int, help="largest n"),
        Option.of("--m-max", type=nonnegative_int, help="largest m"),
        Option.of("--d-max", type=positive_int, help="largest d"),
        Option.of("--k-max", type=nonnegative_int, help="largest k"),
        Option.of("--order", type=nonnegative_int, help="series truncation order"),
        Option.of("--rank-max", type=positive_int, help="largest rank"),
        Option.of("--workers", type=positive_int, default=settings.DEFAULT_WORKERS, help="worker processes"),
    ),
)
@log_and_handle_error(ErrorCategory.VERIFICATION)
def verify(args) -> OutputDocument:
    requested = {name: getattr(args, name) for name in SuiteRanges.GRID_FIELDS}
    ranges = SuiteRanges(**requested, workers=args.workers)
    names = list(SUITES) if args.suite == "all" else [args.suite]

    reports = []
    for name in names:
        with error_context(ErrorCategory.VERIFICATION, f"suite {name}", command="verify"):
            reports += run_suite(name, grid_guard.clamp(ranges, SUITES[name][0]))

    for report in reports:
        if not report.passed:
            cli_logger.log_verification_failure(report)

    failed = sum(1 for report in reports if not report.passed)
    params = {"suite": args.suite, **requested, "workers": args.workers}
    return OutputDocument(
        command="verify",
        params=to_wire(params),
        format=args.format,
        result=to_wire({"total": len(reports), "passed": len(reports) - failed, "failed": failed}),
        reports=reports,
    )
