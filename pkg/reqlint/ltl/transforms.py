"""
Formula Transformations

Provides:
- Negation normal form (implication elimination, Until/Release duality)
- Subformula closure used by the tableau
"""

from functools import lru_cache
from typing import FrozenSet, List

from reqlint.ltl.formula import (
    FALSE,
    TRUE,
    And,
    BoolProp,
    Eventually,
    FalseConst,
    Formula,
    Globally,
    Implies,
    LtlError,
    Next,
    Not,
    NumConstraint,
    Or,
    Release,
    TrueConst,
    Until,
    WeakUntil,
    subformulas,
)


def to_nnf(formula: Formula) -> Formula:
    """
    Convert a formula to negation normal form

    Negations are pushed down to atoms, implications are eliminated and
    weak-until is rewritten as ``a W b == b R (a | b)``. The result is
    logically equivalent to the input.

    Args:
        formula: Well-formed formula

    Returns:
        Formula: Equivalent formula where Not only appears directly above atoms
    """
    return _nnf(formula, False)


@lru_cache(maxsize=65536)
def _nnf(formula: Formula, negated: bool) -> Formula:
    if isinstance(formula, TrueConst):
        return FALSE if negated else TRUE
    if isinstance(formula, FalseConst):
        return TRUE if negated else FALSE
    if isinstance(formula, (BoolProp, NumConstraint)):
        return Not(formula) if negated else formula
    if isinstance(formula, Not):
        return _nnf(formula.operand, not negated)
    if isinstance(formula, Next):
        return Next(_nnf(formula.operand, negated))
    if isinstance(formula, Eventually):
        operand = _nnf(formula.operand, negated)
        return Globally(operand) if negated else Eventually(operand)
    if isinstance(formula, Globally):
        operand = _nnf(formula.operand, negated)
        return Eventually(operand) if negated else Globally(operand)
    if isinstance(formula, WeakUntil):
        return _nnf(Release(formula.right, Or(formula.left, formula.right)), negated)
    if isinstance(formula, Implies):
        left = _nnf(formula.left, not negated)
        right = _nnf(formula.right, negated)
        return And(left, right) if negated else Or(left, right)

    left = _nnf(formula.left, negated)
    right = _nnf(formula.right, negated)
    if isinstance(formula, And):
        return Or(left, right) if negated else And(left, right)
    if isinstance(formula, Or):
        return And(left, right) if negated else Or(left, right)
    if isinstance(formula, Until):
        return Release(left, right) if negated else Until(left, right)
    if isinstance(formula, Release):
        return Until(left, right) if negated else Release(left, right)
    raise LtlError(f"Unsupported formula node: {formula!r}")


def is_nnf(formula: Formula) -> bool:
    """True if Not only occurs directly above atoms and no Implies/WeakUntil occurs"""
    for node in subformulas(formula):
        if isinstance(node, (Implies, WeakUntil)):
            return False
        if isinstance(node, Not) and not isinstance(node.operand, (BoolProp, NumConstraint)):
            return False
    return True


def closure(formula: Formula) -> FrozenSet[Formula]:
    """
    All distinct subformulas of a formula

    A negated atom is a literal: it belongs to the closure but the bare atom
    under it does not.

    Args:
        formula: Formula (normally in NNF)

    Returns:
        frozenset: Subformulas, including the formula itself
    """
    result = set()
    stack = [formula]
    while stack:
        node = stack.pop()
        if node in result:
            continue
        result.add(node)
        if isinstance(node, Not) and isinstance(node.operand, (BoolProp, NumConstraint)):
            continue
        stack.extend(node.children())
    return frozenset(result)


def evaluation_order(formula: Formula) -> List[Formula]:
    """Every distinct subformula in post-order (children before parents)"""
    order = []
    done = set()
    stack = [(formula, False)]
    while stack:
        node, expanded = stack.pop()
        if node in done:
            continue
        if expanded:
            done.add(node)
            order.append(node)
            continue
        stack.append((node, True))
        stack.extend((child, False) for child in reversed(node.children()))
    return order
