"""
Vacuity Check

A requirement with a triggering condition (response, precedence and the
chains) is vacuous when the rest of the requirement set never lets the
trigger occur: the conjunction is satisfiable but not together with
``F trigger``.
"""

import logging
from typing import List, Optional

from tqdm import tqdm

from reqlint.analyses.consistency import make_checker
from reqlint.analyses.results import VacuityFinding
from reqlint.engine.checker import DEFAULT_MAX_STATES, DEFAULT_TIMEOUT, ResourceLimit
from reqlint.engine.incremental import IncrementalChecker
from reqlint.ltl.formula import Eventually, Formula
from reqlint.ltl.lasso import LassoTrace, evaluate_positions
from reqlint.psp.requirement import RequirementSet

logger = logging.getLogger("reqlint.vacuity")


def trigger_occurs(trigger: Formula, witness: LassoTrace) -> bool:
    """True if the trigger holds at some position of the witness"""
    return any(evaluate_positions(trigger, witness)[trigger])


def check_vacuity(requirements: RequirementSet, checker: Optional[IncrementalChecker] = None,
                  witness: Optional[LassoTrace] = None, show_progress: bool = False,
                  max_states: int = DEFAULT_MAX_STATES,
                  timeout: Optional[float] = DEFAULT_TIMEOUT) -> List[VacuityFinding]:
    """
    Check every trigger-bearing requirement for antecedent vacuity

    A trigger already occurring in the consistency witness is a proof of
    non-vacuity and needs no further check.

    Args:
        requirements: Consistent requirement set
        checker: Shared checker over the same requirements (built if omitted)
        witness: Concretized witness of the consistency check, if available
        show_progress: Show a tqdm progress bar
        max_states: Tableau state cap when building a checker
        timeout: Time cap in seconds when building a checker

    Returns:
        list: One VacuityFinding per requirement with a trigger, in file order

    Raises:
        ValueError: If the requirement set is inconsistent
    """
    if checker is None:
        checker = make_checker(requirements, max_states, timeout)
    if witness is None:
        verdict = checker.check()
        if not verdict.satisfiable:
            raise ValueError("Requirement set is inconsistent; every trigger is vacuous")
        witness = verdict.witness

    findings = []
    triggered = [r for r in requirements if r.trigger is not None]
    for requirement in tqdm(triggered, desc="Vacuity", unit="req", disable=not show_progress):
        trigger = requirement.trigger
        if trigger_occurs(trigger, witness):
            findings.append(VacuityFinding(requirement.id, trigger, False, witness))
            continue

        try:
            verdict = checker.check(extra=Eventually(trigger))
        except ResourceLimit as exc:
            logger.warning(f"Vacuity check of {requirement.id} stopped: {exc}")
            findings.append(VacuityFinding(requirement.id, trigger, None, error=str(exc)))
            continue

        if verdict.satisfiable:
            findings.append(VacuityFinding(requirement.id, trigger, False, verdict.witness))
        else:
            logger.warning(f"{requirement.id} is satisfied vacuously: its trigger can never occur")
            findings.append(VacuityFinding(requirement.id, trigger, True))

    return findings
