"""
Verification command handlers: jacobi-check, sign-check and graph-check.

Each returns a report; a failed check exits with status 3.
"""
import random
import time
from typing import Any, Dict, List

from .inputs import failure_response, resolve_surface
from ..algebra.fgroup import format_word
from ..algebra.garlands import jacobi_sum, loop_class, random_loops
from ..algebra.graphcalc import check_graph_laws
from ..algebra.signcalc import verify_parity_identities
from ..models.report import CheckReport
from ..models.run_config import RunConfig
from ..utils import (
    format_success_response,
    get_logger,
    log_command,
    log_result,
)


logger = get_logger(__name__)

DEFAULT_JACOBI_COUNT = 25
DEFAULT_GRAPH_COUNT = 100
JACOBI_MAX_LENGTH = 5
GRAPH_MAX_NU = 4


def _respond(reports: List[CheckReport], start_time: float) -> Dict[str, Any]:
    passed = all(report.passed for report in reports)
    exit_code = 0 if passed else 3
    if not passed:
        logger.error("Check failed", extra={"extra_data": {"failed": [r.name for r in reports if not r.passed]}})
    log_result(logger, exit_code, (time.time() - start_time) * 1000)
    return format_success_response(
        {"passed": passed, "checks": [report.model_dump() for report in reports]},
        exit_code=exit_code
    )


def jacobi_check(config: RunConfig) -> Dict[str, Any]:
    """Jacobi sums of random loop triples with pairwise unrelated roots must vanish."""
    start_time = time.time()
    log_command(logger, config.command, {"surface": config.surface, "seed": config.seed, "count": config.count})

    try:
        surface = resolve_surface(config)
        rng = random.Random(config.seed)
        count = config.count or DEFAULT_JACOBI_COUNT
        failures = 0
        first_failure = None
        for _ in range(count):
            triple = random_loops(rng, 3, surface.rank, JACOBI_MAX_LENGTH)
            total = jacobi_sum(*(loop_class(w) for w in triple), surface)
            if not total.is_zero():
                failures += 1
                if first_failure is None:
                    first_failure = {"loops": [format_word(w) for w in triple], "sum": repr(total)}

        report = CheckReport(
            name="jacobi",
            passed=failures == 0,
            checked=count,
            failures=failures,
            details={"surface": surface.name or config.surface, "seed": config.seed},
            first_failure=first_failure
        )
        return _respond([report], start_time)

    except Exception as e:
        return failure_response(logger, e, config.command, start_time)


def sign_check(config: RunConfig) -> Dict[str, Any]:
    """Exhaustive parity identities of the sign calculus."""
    start_time = time.time()
    log_command(logger, config.command, {})

    try:
        parity = verify_parity_identities()
        reports = [
            CheckReport(
                name=result.name,
                passed=result.passed,
                checked=result.checked,
                failures=result.failures,
                first_failure=result.first_failure
            )
            for result in parity.results
        ]
        return _respond(reports, start_time)

    except Exception as e:
        return failure_response(logger, e, config.command, start_time)


def graph_check(config: RunConfig) -> Dict[str, Any]:
    """Composition laws of allowed graphs on random triples."""
    start_time = time.time()
    log_command(logger, config.command, {"seed": config.seed, "count": config.count})

    try:
        rng = random.Random(config.seed)
        count = config.count or DEFAULT_GRAPH_COUNT
        tally = check_graph_laws(rng, count, max_nu=GRAPH_MAX_NU)
        reports = [
            CheckReport(
                name=law,
                passed=entry["failed"] == 0,
                checked=entry["passed"] + entry["failed"],
                failures=entry["failed"],
                details={"triples": count}
            )
            for law, entry in sorted(tally.items())
        ]
        return _respond(reports, start_time)

    except Exception as e:
        return failure_response(logger, e, config.command, start_time)
