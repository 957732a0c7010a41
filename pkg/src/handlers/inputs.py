"""
Argument resolution shared by the command handlers.
"""
import logging
import time
from typing import Any, Dict, List, Optional

from ..algebra.fgroup import Word, parse_word
from ..models.run_config import RunConfig
from ..surfaces.factory import get_surface
from ..surfaces.ribbon import RibbonSurface
from ..utils.errors import GarlandError, ParseError, format_error_response
from ..utils.logging import log_result


def parse_words(config: RunConfig, exactly: Optional[int] = None, at_least: int = 0) -> List[Word]:
    """
    Parse the word arguments of a command.

    Raises:
        ParseError: If the count is wrong or a word cannot be parsed
    """
    count = len(config.words)
    if exactly is not None and count != exactly:
        raise ParseError(
            f"{config.command} expects {exactly} words, got {count}",
            details={"words": list(config.words)}
        )
    if count < at_least:
        raise ParseError(
            f"{config.command} expects at least {at_least} words, got {count}",
            details={"words": list(config.words)}
        )
    return [parse_word(text) for text in config.words]


def resolve_surface(config: RunConfig) -> RibbonSurface:
    return get_surface(config.surface)


def failure_response(logger: logging.Logger, e: Exception, command: str, start_time: float) -> Dict[str, Any]:
    """Log a failed command and format its error response."""
    if isinstance(e, GarlandError):
        logger.warning(f"{command} rejected: {e.message}", extra={"extra_data": e.to_dict()})
    else:
        logger.error(f"Error running {command}: {e}", exc_info=True)
    response = format_error_response(e)
    log_result(logger, response["exit_code"], (time.time() - start_time) * 1000)
    return response
