"""
Logging utility module.
Provides structured JSON logging on stderr, keeping stdout for reports.
"""
import logging
import json
import sys
from typing import Any, Dict, Optional
from functools import lru_cache

from .config import get_config


class JSONFormatter(logging.Formatter):
    """JSON formatter for structured logging."""

    def format(self, record: logging.LogRecord) -> str:
        log_data = {
            "timestamp": self.formatTime(record),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }

        # Add extra fields if present
        if hasattr(record, "extra_data"):
            log_data["data"] = record.extra_data

        # Add exception info if present
        if record.exc_info:
            log_data["exception"] = self.formatException(record.exc_info)

        return json.dumps(log_data, default=str)


@lru_cache(maxsize=32)
def get_logger(name: str) -> logging.Logger:
    """Get a configured logger instance."""
    config = get_config()

    logger = logging.getLogger(name)
    logger.setLevel(getattr(logging, config.log_level, logging.WARNING))

    # Clear existing handlers
    logger.handlers.clear()

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(JSONFormatter())
    logger.addHandler(handler)
    logger.propagate = False

    return logger


def log_command(logger: logging.Logger, command: str, details: Dict[str, Any]) -> None:
    """Log an incoming command and its arguments."""
    logger.info(
        f"Running command: {command}",
        extra={"extra_data": {"command": command, **details}}
    )


def log_result(logger: logging.Logger, exit_code: int, duration_ms: Optional[float] = None) -> None:
    """Log the outcome of a command."""
    data: Dict[str, Any] = {"exit_code": exit_code}
    if duration_ms is not None:
        data["duration_ms"] = round(duration_ms, 2)

    logger.info("Command finished", extra={"extra_data": data})
