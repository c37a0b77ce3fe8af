"""
Incremental Checks over Requirement Subsets

Re-runs satisfiability on the conjunction of a translated requirement set with
some requirements left out, optionally strengthened by one extra conjunct.
Verdicts are memoized per (excluded ids, extra conjunct).
"""

import logging
from dataclasses import replace
from typing import Dict, FrozenSet, Iterable, Optional, Sequence, Tuple

from reqlint.abstraction import build_abstraction, concretize_witness
from reqlint.ltl.formula import And, Formula, conjunction
from reqlint.ltl.lasso import eval_on_lasso
from reqlint.engine.checker import (
    DEFAULT_MAX_STATES,
    DEFAULT_TIMEOUT,
    SatChecker,
    SatVerdict,
    WitnessError,
)


class IncrementalChecker:
    """Satisfiability of requirement subsets with numerical atoms"""

    def __init__(self, translations: Sequence[Tuple[str, Formula]], max_states: int = DEFAULT_MAX_STATES,
                 timeout: Optional[float] = DEFAULT_TIMEOUT):
        """
        Initialize checker

        Args:
            translations: (requirement id, LTL formula) pairs in file order
            max_states: Tableau state cap per check
            timeout: Wall-clock cap per check in seconds
        """
        self.logger = logging.getLogger("reqlint.IncrementalChecker")
        self.translations = tuple(translations)
        self.checker = SatChecker(max_states=max_states, timeout=timeout)
        self._cache: Dict[Tuple[FrozenSet[str], Optional[Formula]], SatVerdict] = {}

    @property
    def ids(self) -> Tuple[str, ...]:
        return tuple(req_id for req_id, _ in self.translations)

    def formula(self, excluded: Iterable[str] = (), extra: Optional[Formula] = None) -> Formula:
        """Conjunction of the kept requirements, in order, and the extra conjunct"""
        excluded = frozenset(excluded)
        phi = conjunction(f for req_id, f in self.translations if req_id not in excluded)
        if extra is None:
            return phi
        if not any(req_id not in excluded for req_id in self.ids):
            return extra
        return And(phi, extra)

    def check(self, excluded: Iterable[str] = (), extra: Optional[Formula] = None) -> SatVerdict:
        """
        Check the conjunction of all requirements not in ``excluded``

        The abstraction is rebuilt for the reduced signature. A satisfiable
        verdict carries a witness that also assigns a representative value to
        every numerical variable.

        Args:
            excluded: Requirement ids to leave out
            extra: Additional conjunct (may contain numerical atoms)

        Returns:
            SatVerdict: Verdict with the abstraction attached

        Raises:
            ResourceLimit: If a cap is exceeded
        """
        key = (frozenset(excluded), extra)
        if key in self._cache:
            return self._cache[key]

        phi = self.formula(key[0], extra)
        abstraction = build_abstraction(phi)
        verdict = self.checker.check(abstraction.query)

        witness = verdict.witness
        if witness is not None and abstraction.map.variables:
            witness = concretize_witness(witness, abstraction.map)
            if not eval_on_lasso(phi, witness):
                raise WitnessError(f"Concretized witness {witness!r} does not satisfy the formula")

        verdict = replace(verdict, witness=witness, abstraction=abstraction)
        self._cache[key] = verdict
        self.logger.debug(
            f"Checked {len(self.translations) - len(key[0] & set(self.ids))} requirements: "
            f"{'SAT' if verdict.satisfiable else 'UNSAT'}"
        )
        return verdict


def check_sat_incremental(translations: Sequence[Tuple[str, Formula]], excluded: Iterable[str] = (),
                          max_states: int = DEFAULT_MAX_STATES,
                          timeout: Optional[float] = DEFAULT_TIMEOUT) -> SatVerdict:
    """One-shot incremental check of ``translations`` without ``excluded``"""
    return IncrementalChecker(translations, max_states, timeout).check(excluded)
