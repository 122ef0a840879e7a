# main.py - Command line entry point
import argparse
import json
import sys
import time
from datetime import datetime, timezone
from typing import List, Optional, Tuple

from loguru import logger

# Core imports
from core.config import settings
from core.logging_system import ComputationError, ErrorHandler, LogLevel, cli_logger
from core.models import OutputDocument

# Command imports
from commands import catalan, dim, hilbert, narayana, verify
from commands.router import include_routers

# Middleware imports
from middleware.grid_guard import grid_guard
from middleware.rendering import FORMATS, render

ROUTERS = [catalan.router, narayana.router, dim.router, hilbert.router, verify.router]


def common_options() -> argparse.ArgumentParser:
    """Flags every sub-command accepts."""
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--format", choices=FORMATS, default=settings.DEFAULT_FORMAT, help="output format")
    parent.add_argument("--metadata", action="store_true", help="add timestamp, elapsed time and version")
    verbosity = parent.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="debug diagnostics on stderr")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="errors only on stderr")
    parent.add_argument("--log-file", metavar="PATH", help="also write JSON-lines logs to PATH")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="main.py",
        description="Exact Hilbert series of highest weight varieties and the Narayana numbers behind them",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.VERSION}")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)
    include_routers(subparsers, ROUTERS, parents=[common_options()])
    return parser


def _log_level(args) -> str:
    if args.verbose:
        return LogLevel.DEBUG
    if args.quiet:
        return LogLevel.ERROR
    return settings.LOG_LEVEL


def _report_error(error: ComputationError, command: Optional[str], output_format: str):
    payload = ErrorHandler.create_error_document(error, command)
    if output_format == "json":
        print(json.dumps(payload, indent=2), file=sys.stderr)
    else:
        print(f"error: {error.message}", file=sys.stderr)


def cmd_dispatch(argv: Optional[List[str]] = None) -> Tuple[int, Optional[OutputDocument]]:
    """Parses argv and runs one command; 0 on success, 1 on a wrong result or failed check, 2 on caller error."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exit_:
        # argparse has already printed usage to stderr
        code = exit_.code if isinstance(exit_.code, int) else 2
        return code, None

    cli_logger.setup_logger(_log_level(args), args.log_file)
    command = args.command_name
    start_time = time.time()

    try:
        grid_guard.limit  # a malformed HWV_MAX_GRID fails every command, not only verify
        cli_logger.log_command(command, {k: v for k, v in vars(args).items() if k != "handler"})
        document = args.handler(args)
    except ComputationError as e:
        logger.bind(command=command, error_category=e.category).debug(f"{e.message_key}: {e.message}")
        _report_error(e, command, args.format)
        return e.exit_code, None

    elapsed = time.time() - start_time
    cli_logger.log_result(command, elapsed)

    if args.metadata:
        document = document.model_copy(update={"metadata": {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "elapsed_seconds": f"{elapsed:.6f}",
            "version": settings.VERSION,
        }})

    return (1 if document.failures else 0), document


def main(argv: Optional[List[str]] = None) -> int:
    exit_code, document = cmd_dispatch(argv)
    if document is not None:
        print(render(document))
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
