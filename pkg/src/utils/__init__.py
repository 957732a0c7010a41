# Utils Package
from .config import Config, get_config
from .errors import (
    ErrorCode,
    GarlandError,
    ParseError,
    TrivialInput,
    CommonRoot,
    IndexOutOfRange,
    NotTreeLike,
    WrongGraph,
    InvalidArgument,
    VerificationError,
    format_error_response,
    format_success_response,
)
from .logging import get_logger, log_command, log_result

__all__ = [
    "Config",
    "get_config",
    "ErrorCode",
    "GarlandError",
    "ParseError",
    "TrivialInput",
    "CommonRoot",
    "IndexOutOfRange",
    "NotTreeLike",
    "WrongGraph",
    "InvalidArgument",
    "VerificationError",
    "format_error_response",
    "format_success_response",
    "get_logger",
    "log_command",
    "log_result",
]
