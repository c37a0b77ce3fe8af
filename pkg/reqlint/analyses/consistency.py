"""
Consistency Check

Decides whether some infinite behaviour satisfies every requirement at once.
"""

import logging
from typing import Optional

from reqlint.analyses.results import ConsistencyResult, Verdict
from reqlint.engine.checker import DEFAULT_MAX_STATES, DEFAULT_TIMEOUT, ResourceLimit
from reqlint.engine.incremental import IncrementalChecker
from reqlint.ltl.lasso import LassoTrace
from reqlint.psp.catalog import translate_all
from reqlint.psp.requirement import RequirementSet

logger = logging.getLogger("reqlint.consistency")


def make_checker(requirements: RequirementSet, max_states: int = DEFAULT_MAX_STATES,
                 timeout: Optional[float] = DEFAULT_TIMEOUT) -> IncrementalChecker:
    """Translate a requirement set once and wrap it for subset checks"""
    return IncrementalChecker(translate_all(requirements), max_states=max_states, timeout=timeout)


def check_consistency(requirements: RequirementSet, checker: Optional[IncrementalChecker] = None,
                      max_states: int = DEFAULT_MAX_STATES,
                      timeout: Optional[float] = DEFAULT_TIMEOUT) -> ConsistencyResult:
    """
    Check that a requirement set is satisfiable

    The conjunction of all requirement formulas is abstracted and handed to
    the satisfiability engine. The empty set is consistent.

    Args:
        requirements: Parsed requirements
        checker: Shared checker over the same requirements (built if omitted)
        max_states: Tableau state cap when building a checker
        timeout: Time cap in seconds when building a checker

    Returns:
        ConsistencyResult: Verdict, concretized witness and engine statistics
    """
    if len(requirements) == 0:
        logger.warning("Empty set: no requirements to check")
        return ConsistencyResult(Verdict.CONSISTENT, LassoTrace((), ({},)), message="empty set")

    if checker is None:
        checker = make_checker(requirements, max_states, timeout)

    try:
        verdict = checker.check()
    except ResourceLimit as exc:
        logger.warning(f"Consistency check stopped: {exc}")
        return ConsistencyResult(Verdict.INDETERMINATE, stats=exc.stats, message=str(exc))

    result = Verdict.CONSISTENT if verdict.satisfiable else Verdict.INCONSISTENT
    logger.info(f"{len(requirements)} requirements: {result.value}")
    return ConsistencyResult(result, verdict.witness, verdict.stats)
