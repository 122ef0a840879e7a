# core/logging_system.py - Logging, error categories and error handling
import sys
import traceback
from contextlib import contextmanager
from functools import wraps
from typing import Any, Dict, Optional

from loguru import logger

from core.config import settings
from core.messages import Messages


class LogLevel:
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    CRITICAL = "CRITICAL"


class ErrorCategory:
    RANGE = "RANGE"
    DOMAIN = "DOMAIN"
    ROOT_TYPE = "ROOT_TYPE"
    INVARIANT = "INVARIANT"
    POLE_ORDER = "POLE_ORDER"
    USAGE = "USAGE"
    VERIFICATION = "VERIFICATION"
    CONFIG = "CONFIG"
    SYSTEM = "SYSTEM"


# Caller errors exit 2, everything that signals a wrong result exits 1
EXIT_CODES: Dict[str, int] = {
    ErrorCategory.RANGE: 2,
    ErrorCategory.DOMAIN: 2,
    ErrorCategory.ROOT_TYPE: 2,
    ErrorCategory.USAGE: 2,
    ErrorCategory.CONFIG: 2,
    ErrorCategory.INVARIANT: 1,
    ErrorCategory.POLE_ORDER: 1,
    ErrorCategory.VERIFICATION: 1,
    ErrorCategory.SYSTEM: 1,
}


class CLILogger:
    """loguru configuration for the command line: diagnostics on stderr only"""

    def __init__(self, level: str = settings.LOG_LEVEL):
        self.level = level
        self.setup_logger(level)

    def setup_logger(self, level: str, log_file: Optional[str] = None):
        """Installs the stderr sink and, optionally, a serialized file sink"""
        logger.remove()
        self.level = level

        # stdout is reserved for the rendered document
        logger.add(
            sink=lambda msg: print(msg, end="", file=sys.stderr),
            format="<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | {message}",
            level=level,
            filter=self._default_extra,
        )

        if log_file:
            logger.add(
                log_file,
                format="{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {name}:{function}:{line} | {extra[command]} | {extra[error_category]} | {message}",
                level=LogLevel.DEBUG,
                rotation="10 MB",
                retention="30 days",
                serialize=True,
                filter=self._default_extra,
            )

    def _default_extra(self, record) -> bool:
        """Fills the extra fields the file format refers to"""
        record["extra"].setdefault("command", "no-command")
        record["extra"].setdefault("error_category", "no-category")
        return True

    def log_command(self, command: str, params: Dict[str, Any]):
        logger.bind(command=command).debug(f"Running {command} with {params}")

    def log_result(self, command: str, elapsed: float):
        logger.bind(command=command).debug(f"{command} finished in {elapsed:.3f}s")

    def log_error(
        self,
        error: Exception,
        category: str,
        command: Optional[str] = None,
        additional_context: Optional[Dict[str, Any]] = None,
    ):
        error_context = {
            "command": command or "no-command",
            "error_category": category,
            "error_type": type(error).__name__,
            "error_message": str(error),
            "traceback": traceback.format_exc(),
        }

        if additional_context:
            error_context.update(additional_context)

        logger.bind(**error_context).error(f"Error in {category}: {error}")

    def log_verification_failure(self, report):
        logger.bind(command="verify", error_category=ErrorCategory.VERIFICATION).warning(
            f"{report.identity} failed at {report.point}: left={report.left} right={report.right}"
        )

    def log_grid_clamp(self, field: str, requested: int, limit: int):
        logger.bind(command="verify", error_category=ErrorCategory.CONFIG).warning(
            Messages.get("grid_clamped", field=field, requested=requested, limit=limit)
        )


# Global logger instance
cli_logger = CLILogger()


class ComputationError(Exception):
    """Every failure the library or the CLI reports"""

    def __init__(
        self,
        message_key: str,
        category: str = ErrorCategory.SYSTEM,
        exit_code: Optional[int] = None,
        details: Optional[Dict[str, Any]] = None,
        **message_params,
    ):
        self.message_key = message_key
        self.category = category
        self.exit_code = exit_code if exit_code is not None else EXIT_CODES.get(category, 1)
        self.message_params = message_params
        self.details = details or {}
        self.message = Messages.get(message_key, **message_params)

        super().__init__(self.message)


def range_error(name: str, value: Any, bounds: str) -> ComputationError:
    return ComputationError("range_error", ErrorCategory.RANGE, name=name, value=value, bounds=bounds)


class ErrorHandler:
    """Builds the machine-readable error payload"""

    @staticmethod
    def create_error_document(error: ComputationError, command: Optional[str] = None) -> Dict[str, Any]:
        return {
            "success": False,
            "command": command,
            "error": {
                "message": error.message,
                "code": error.message_key,
                "category": error.category,
            },
        }


def log_and_handle_error(
    category: str = ErrorCategory.SYSTEM,
    message_key: str = "internal_error",
):
    """Decorator for command handlers: unexpected exceptions become ComputationError"""
    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            try:
                return func(*args, **kwargs)
            except ComputationError:
                raise
            except Exception as e:
                cli_logger.log_error(
                    error=e,
                    category=category,
                    command=func.__name__,
                    additional_context={"function": func.__name__},
                )
                raise ComputationError(message_key, category, error=str(e)) from e
        return wrapper
    return decorator


@contextmanager
def error_context(category: str, operation: str, command: Optional[str] = None):
    """Context manager for error logging around one sub-step"""
    try:
        yield
    except Exception as e:
        cli_logger.log_error(
            error=e,
            category=getattr(e, "category", category),
            command=command,
            additional_context={"operation": operation},
        )
        raise
