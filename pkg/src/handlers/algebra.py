"""
Handler for the ⋆-product command.
"""
import functools
import time
from typing import Any, Dict

from .inputs import failure_response, parse_words
from ..algebra.garlands import loop_class, star as star_product
from ..models.report import ElementReport
from ..models.run_config import RunConfig
from ..utils import (
    format_success_response,
    get_logger,
    log_command,
    log_result,
)


logger = get_logger(__name__)


def star(config: RunConfig) -> Dict[str, Any]:
    """
    Handler for ``star w1 w2 ...``.

    Multiplies the loop classes of all given words left to right.
    """
    start_time = time.time()
    log_command(logger, config.command, {"words": list(config.words)})

    try:
        words = parse_words(config, at_least=1)
        element = functools.reduce(star_product, (loop_class(word) for word in words))

        log_result(logger, 0, (time.time() - start_time) * 1000)
        return format_success_response(ElementReport.from_element(element).model_dump())

    except Exception as e:
        return failure_response(logger, e, config.command, start_time)
