"""
Inconsistency Explanation

Deletion-based extraction of a minimal inconsistent subset: each requirement,
in file order, is dropped for good if the working set stays inconsistent
without it. The result is minimal (no member can be removed), not
necessarily of minimum cardinality.
"""

import logging
from typing import Iterable, Optional

from tqdm import tqdm

from reqlint.analyses.consistency import make_checker
from reqlint.analyses.results import MusResult
from reqlint.engine.checker import DEFAULT_MAX_STATES, DEFAULT_TIMEOUT, ResourceLimit
from reqlint.engine.incremental import IncrementalChecker
from reqlint.psp.requirement import RequirementSet

logger = logging.getLogger("reqlint.explanation")


def explain_inconsistency(requirements: RequirementSet, checker: Optional[IncrementalChecker] = None,
                          verify: bool = False, show_progress: bool = False,
                          max_states: int = DEFAULT_MAX_STATES,
                          timeout: Optional[float] = DEFAULT_TIMEOUT) -> MusResult:
    """
    Find a minimal inconsistent subset of an inconsistent requirement set

    Args:
        requirements: Inconsistent requirement set
        checker: Shared checker over the same requirements (built if omitted)
        verify: Re-check the minimality postcondition before returning
        show_progress: Show a tqdm progress bar over the deletion loop
        max_states: Tableau state cap when building a checker
        timeout: Time cap in seconds when building a checker

    Returns:
        MusResult: The subset; ``complete`` is False if a resource cap
            interrupted the deletion loop (``ids`` is then the working set so
            far) or the requested verification

    Raises:
        ValueError: If the requirement set is consistent
        ResourceLimit: If the initial check of the full set exceeds a cap
    """
    if checker is None:
        checker = make_checker(requirements, max_states, timeout)

    ids = list(requirements.ids)
    if checker.check().satisfiable:
        raise ValueError("Requirement set is consistent; nothing to explain")

    removed = set()
    checks = 1
    for position, req_id in enumerate(tqdm(ids, desc="Explaining", unit="req", disable=not show_progress)):
        try:
            verdict = checker.check(removed | {req_id})
        except ResourceLimit as exc:
            logger.warning(f"Explanation interrupted at {req_id}: {exc}")
            working = tuple(i for i in ids if i not in removed)
            return MusResult(working, complete=False, checks=checks, pending=tuple(ids[position:]))
        checks += 1
        if not verdict.satisfiable:
            removed.add(req_id)
            logger.debug(f"{req_id} is not needed for the inconsistency")

    mus = tuple(i for i in ids if i not in removed)
    if verify:
        try:
            minimal = verify_mus(checker, mus)
        except ResourceLimit as exc:
            logger.warning(f"Could not verify subset {', '.join(mus)}: {exc}")
            return MusResult(mus, complete=False, checks=checks)
        if not minimal:
            raise AssertionError(f"Subset {mus} is not a minimal inconsistent subset")

    logger.info(f"Minimal inconsistent subset: {', '.join(mus)} ({checks} checks)")
    return MusResult(mus, complete=True, checks=checks)


def verify_mus(checker: IncrementalChecker, mus: Iterable[str]) -> bool:
    """
    Check that ``mus`` is inconsistent and that every single removal is consistent

    Args:
        checker: Checker over the full requirement set
        mus: Candidate subset

    Returns:
        bool: True if both conditions hold
    """
    mus = tuple(mus)
    outside = frozenset(checker.ids) - set(mus)
    if checker.check(outside).satisfiable:
        logger.error(f"Subset {mus} is consistent")
        return False
    for req_id in mus:
        if not checker.check(outside | {req_id}).satisfiable:
            logger.error(f"Subset {mus} stays inconsistent without {req_id}")
            return False
    return True
