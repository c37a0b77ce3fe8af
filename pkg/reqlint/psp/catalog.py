"""
Pattern Catalog

LTL mappings for the eight supported patterns under the five scopes. Weak
until is spelled with U and G (``a W b == (a U b) | G a``) so the formulas
only use operators every downstream consumer understands. The table is
documented in docs/PATTERNS.md and pinned by tests/golden/patterns.ltl.
"""

from typing import Callable, Dict, Iterable, Tuple, Union

from reqlint.ltl.formula import (
    And,
    Eventually,
    Formula,
    Globally,
    Implies,
    Next,
    Not,
    Or,
    Until,
    conjunction,
    weak_until,
)
from reqlint.psp.requirement import (
    Pattern,
    PspInstance,
    Requirement,
    RequirementSet,
    Scope,
    UnsupportedCombination,
)

W = weak_until


def _open(psp: PspInstance) -> Formula:
    """Scope opened by Q and not immediately closed by R"""
    return And(psp.q, Not(psp.r))


def _between(psp: PspInstance) -> Formula:
    """Scope opened by Q and eventually closed by R"""
    return And(And(psp.q, Not(psp.r)), Eventually(psp.r))


# Universality / Absence share their shape; Absence passes the negated payload


def _always(scope: Scope, psp: PspInstance, p: Formula) -> Formula:
    if scope is Scope.GLOBALLY:
        return Globally(p)
    elif scope is Scope.BEFORE:
        return Implies(Eventually(psp.r), Until(p, psp.r))
    elif scope is Scope.AFTER:
        return Globally(Implies(psp.q, Globally(p)))
    elif scope is Scope.BETWEEN:
        return Globally(Implies(_between(psp), Until(p, psp.r)))
    elif scope is Scope.AFTER_UNTIL:
        return Globally(Implies(_open(psp), W(p, psp.r)))
    raise UnsupportedCombination(f"{scope.value}/always")


def universality(psp: PspInstance) -> Formula:
    return _always(psp.scope, psp, psp.p)


def absence(psp: PspInstance) -> Formula:
    return _always(psp.scope, psp, Not(psp.p))


def existence(psp: PspInstance) -> Formula:
    p = psp.p
    if psp.scope is Scope.GLOBALLY:
        return Eventually(p)
    elif psp.scope is Scope.BEFORE:
        return W(Not(psp.r), And(p, Not(psp.r)))
    elif psp.scope is Scope.AFTER:
        return Or(Globally(Not(psp.q)), Eventually(And(psp.q, Eventually(p))))
    elif psp.scope is Scope.BETWEEN:
        return Globally(Implies(_open(psp), W(Not(psp.r), And(p, Not(psp.r)))))
    elif psp.scope is Scope.AFTER_UNTIL:
        return Globally(Implies(_open(psp), Until(Not(psp.r), And(p, Not(psp.r)))))
    raise UnsupportedCombination(f"{psp.scope.value}/{psp.pattern.value}")


def _at_most_global(p: Formula, k: int) -> Formula:
    # At most k maximal blocks of p over the whole trace
    formula = Globally(Not(p))
    for _ in range(k):
        formula = W(Not(p), W(p, formula))
    return formula


def _at_most_until(p: Formula, r: Formula, k: int) -> Formula:
    # At most k maximal blocks of p before the next r
    formula = W(Not(p), r)
    for _ in range(k):
        formula = W(And(Not(p), Not(r)), Or(r, W(And(p, Not(r)), Or(r, formula))))
    return formula


def bounded_existence(psp: PspInstance) -> Formula:
    p, k = psp.p, psp.bound
    if psp.scope is Scope.GLOBALLY:
        return _at_most_global(p, k)
    elif psp.scope is Scope.BEFORE:
        return Implies(Eventually(psp.r), _at_most_until(p, psp.r, k))
    elif psp.scope is Scope.AFTER:
        return Implies(Eventually(psp.q), Until(Not(psp.q), And(psp.q, _at_most_global(p, k))))
    elif psp.scope is Scope.BETWEEN:
        return Globally(Implies(_between(psp), _at_most_until(p, psp.r, k)))
    elif psp.scope is Scope.AFTER_UNTIL:
        return Globally(Implies(_open(psp), _at_most_until(p, psp.r, k)))
    raise UnsupportedCombination(f"{psp.scope.value}/{psp.pattern.value}")


def precedence(psp: PspInstance) -> Formula:
    """S precedes P: every P is preceded by an S within the scope"""
    p, s = psp.p, psp.s
    if psp.scope is Scope.GLOBALLY:
        return W(Not(p), s)
    elif psp.scope is Scope.BEFORE:
        return Implies(Eventually(psp.r), Until(Not(p), Or(s, psp.r)))
    elif psp.scope is Scope.AFTER:
        return Or(Globally(Not(psp.q)), Eventually(And(psp.q, W(Not(p), s))))
    elif psp.scope is Scope.BETWEEN:
        return Globally(Implies(_between(psp), Until(Not(p), Or(s, psp.r))))
    elif psp.scope is Scope.AFTER_UNTIL:
        return Globally(Implies(_open(psp), W(Not(p), Or(s, psp.r))))
    raise UnsupportedCombination(f"{psp.scope.value}/{psp.pattern.value}")


def response(psp: PspInstance) -> Formula:
    """S responds to P: every P is followed by an S within the scope"""
    p, s = psp.p, psp.s
    if psp.scope is Scope.GLOBALLY:
        return Globally(Implies(p, Eventually(s)))
    elif psp.scope is Scope.AFTER:
        return Globally(Implies(psp.q, Globally(Implies(p, Eventually(s)))))

    r = psp.r
    answered = Implies(p, Until(Not(r), And(s, Not(r))))
    if psp.scope is Scope.BEFORE:
        return Implies(Eventually(r), Until(answered, r))
    elif psp.scope is Scope.BETWEEN:
        return Globally(Implies(_between(psp), Until(answered, r)))
    elif psp.scope is Scope.AFTER_UNTIL:
        return Globally(Implies(_open(psp), W(answered, r)))
    raise UnsupportedCombination(f"{psp.scope.value}/{psp.pattern.value}")


def response_chain(psp: PspInstance) -> Formula:
    """S, T respond to P: every P is followed by S and later by T"""
    p, s, t = psp.p, psp.s, psp.t
    chain = Globally(Implies(p, Eventually(And(s, Next(Eventually(t))))))
    if psp.scope is Scope.GLOBALLY:
        return chain
    elif psp.scope is Scope.AFTER:
        return Globally(Implies(psp.q, chain))

    r = psp.r
    answered = Implies(p, Until(Not(r), And(And(s, Not(r)), Next(Until(Not(r), t)))))
    if psp.scope is Scope.BEFORE:
        return Implies(Eventually(r), Until(answered, r))
    elif psp.scope is Scope.BETWEEN:
        return Globally(Implies(_between(psp), Until(answered, r)))
    elif psp.scope is Scope.AFTER_UNTIL:
        return Globally(Implies(_open(psp), Until(answered, Or(r, chain))))
    raise UnsupportedCombination(f"{psp.scope.value}/{psp.pattern.value}")


def precedence_chain(psp: PspInstance) -> Formula:
    """S, T precede P: every P is preceded by S and then T"""
    p, s, t = psp.p, psp.s, psp.t
    sequence = And(And(s, Not(p)), Next(Until(Not(p), t)))
    global_chain = Implies(Eventually(p), Until(Not(p), sequence))
    if psp.scope is Scope.GLOBALLY:
        return global_chain
    elif psp.scope is Scope.AFTER:
        return Or(Globally(Not(psp.q)), Until(Not(psp.q), And(psp.q, global_chain)))

    r = psp.r
    bounded = Until(Not(p), Or(r, sequence))
    if psp.scope is Scope.BEFORE:
        return Implies(Eventually(r), bounded)
    elif psp.scope is Scope.BETWEEN:
        return Globally(Implies(_between(psp), bounded))
    elif psp.scope is Scope.AFTER_UNTIL:
        return Globally(Implies(_open(psp), Or(bounded, Globally(Not(p)))))
    raise UnsupportedCombination(f"{psp.scope.value}/{psp.pattern.value}")


PATTERN_TABLE: Dict[Pattern, Callable[[PspInstance], Formula]] = {
    Pattern.UNIVERSALITY: universality,
    Pattern.ABSENCE: absence,
    Pattern.EXISTENCE: existence,
    Pattern.BOUNDED_EXISTENCE: bounded_existence,
    Pattern.PRECEDENCE: precedence,
    Pattern.RESPONSE: response,
    Pattern.RESPONSE_CHAIN: response_chain,
    Pattern.PRECEDENCE_CHAIN: precedence_chain,
}


def supported_combinations() -> Tuple[Tuple[Scope, Pattern], ...]:
    """Every (scope, pattern) pair with a mapping"""
    return tuple((scope, pattern) for pattern in PATTERN_TABLE for scope in Scope)


def psp_to_ltl(requirement: Union[Requirement, PspInstance]) -> Formula:
    """
    Translate a requirement into its LTL formula

    Args:
        requirement: Requirement or bare pattern instance

    Returns:
        Formula: LTL formula whose atoms are the payload atoms

    Raises:
        UnsupportedCombination: If the (scope, pattern) pair has no mapping
    """
    psp = requirement.psp if isinstance(requirement, Requirement) else requirement
    try:
        translate = PATTERN_TABLE[psp.pattern]
    except KeyError:
        raise UnsupportedCombination(f"No mapping for pattern {psp.pattern!r}") from None
    return translate(psp)


def translate_all(requirements: Iterable[Requirement]) -> Tuple[Tuple[str, Formula], ...]:
    """(id, formula) for every requirement, in input order"""
    return tuple((requirement.id, psp_to_ltl(requirement)) for requirement in requirements)


def conjoin(requirements: Union[RequirementSet, Iterable[Requirement]]) -> Formula:
    """
    Conjunction of the requirement formulas in input order

    Folded to the left, so n requirements give n - 1 top-level And nodes.
    The empty set yields ``true``.
    """
    return conjunction(psp_to_ltl(requirement) for requirement in requirements)
