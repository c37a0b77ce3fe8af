"""
Tableau Construction

Lazily expanded tableau graph for propositional LTL formulas in negation
normal form. A state is the set of formulas that must hold at one instant,
saturated under the local expansion rules::

    a & b   ->  a, b
    a | b   ->  a          or  b
    F a     ->  a          or  X F a
    G a     ->  a, X G a
    a U b   ->  b          or  a, X (a U b)
    a R b   ->  b, a       or  b, X (a R b)

The successors of a state are the expansions of its Next obligations. Every
Until (and Eventually) subformula contributes one fairness set: the states
where it is not pending or where its right-hand side holds.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, FrozenSet, List, Optional, Tuple

from reqlint.ltl.formula import (
    And,
    BoolProp,
    Eventually,
    FalseConst,
    Formula,
    Globally,
    Next,
    Not,
    Or,
    Release,
    TrueConst,
    Until,
    format_formula,
    propositions,
)
from reqlint.ltl.transforms import closure

# Expansion steps between two budget checks
BUDGET_INTERVAL = 1024


@lru_cache(maxsize=65536)
def formula_key(formula: Formula) -> str:
    """Text sort key used to keep the construction deterministic"""
    return format_formula(formula)


def _complement(literal: Formula) -> Formula:
    if isinstance(literal, Not):
        return literal.operand
    return Not(literal)


def _is_literal(formula: Formula) -> bool:
    return isinstance(formula, BoolProp) or (isinstance(formula, Not) and isinstance(formula.operand, BoolProp))


@dataclass(frozen=True)
class TableauState:
    """Locally saturated, contradiction-free set of formulas"""

    formulas: FrozenSet[Formula]

    @property
    def literals(self) -> Dict[str, bool]:
        """Truth values forced on propositions in this state"""
        result = {}
        for formula in self.formulas:
            if isinstance(formula, BoolProp):
                result[formula.name] = True
            elif isinstance(formula, Not) and isinstance(formula.operand, BoolProp):
                result[formula.operand.name] = False
        return result

    @property
    def obligations(self) -> FrozenSet[Formula]:
        """Formulas that must hold in every successor"""
        return frozenset(f.operand for f in self.formulas if isinstance(f, Next))

    def __repr__(self) -> str:
        return f"<TableauState({len(self.formulas)} formulas)>"


def expand(obligations: FrozenSet[Formula], tick: Optional[Callable[[], None]] = None) -> List[FrozenSet[Formula]]:
    """
    All saturated, consistent formula sets that fulfil a set of obligations

    Args:
        obligations: Formulas in NNF that must hold now
        tick: Called every BUDGET_INTERVAL expansion steps

    Returns:
        list: Distinct formula sets in a deterministic order
    """
    results: List[FrozenSet[Formula]] = []
    seen = set()
    stack: List[Tuple[Tuple[Formula, ...], FrozenSet[Formula]]] = [
        (tuple(sorted(obligations, key=formula_key)), frozenset())
    ]
    steps = 0

    while stack:
        steps += 1
        if tick is not None and steps % BUDGET_INTERVAL == 0:
            tick()

        todo, now = stack.pop()
        if not todo:
            if now not in seen:
                seen.add(now)
                results.append(now)
            continue

        formula, rest = todo[0], todo[1:]
        if formula in now:
            stack.append((rest, now))
            continue
        current = now | {formula}
        branches: Tuple[Tuple[Formula, ...], ...]

        if isinstance(formula, (TrueConst, Next)):
            branches = ((),)
        elif isinstance(formula, FalseConst):
            branches = ()
        elif isinstance(formula, (BoolProp, Not)):
            branches = () if _complement(formula) in now else ((),)
        elif isinstance(formula, And):
            branches = ((formula.left, formula.right),)
        elif isinstance(formula, Or):
            if formula.left in now or formula.right in now:
                branches = ((),)
            else:
                branches = ((formula.left,), (formula.right,))
        elif isinstance(formula, Eventually):
            branches = ((),) if formula.operand in now else ((formula.operand,), (Next(formula),))
        elif isinstance(formula, Globally):
            branches = ((formula.operand, Next(formula)),)
        elif isinstance(formula, Until):
            if formula.right in now:
                branches = ((),)
            else:
                branches = ((formula.right,), (formula.left, Next(formula)))
        elif isinstance(formula, Release):
            branches = ((formula.right, formula.left), (formula.right, Next(formula)))
        else:
            raise ValueError(f"Formula is not in negation normal form: {formula_key(formula)}")

        # Reversed so the first branch is explored first
        for added in reversed(branches):
            stack.append((rest + added, current))

    return results


class TableauGraph:
    """Explored part of the tableau of a formula

    States are numbered in discovery order. Successors are computed on first
    request and cached, so ``edges`` holds exactly the explored transitions.
    """

    def __init__(self, formula: Formula, on_new_state: Optional[Callable[[int], None]] = None,
                 tick: Optional[Callable[[], None]] = None):
        """
        Initialize the graph

        Args:
            formula: Boolean-only formula in NNF
            on_new_state: Called with the state count whenever a state is added
            tick: Called periodically during expansion
        """
        self.logger = logging.getLogger("reqlint.TableauGraph")
        self.formula = formula
        self.propositions = propositions(formula)
        self.fairness: Tuple[Formula, ...] = tuple(
            sorted(
                (f for f in closure(formula) if isinstance(f, (Until, Eventually))),
                key=formula_key,
            )
        )
        self.all_accepting = (1 << len(self.fairness)) - 1

        self.states: List[TableauState] = []
        self.masks: List[int] = []
        self.edges: Dict[int, List[int]] = {}
        self._index: Dict[FrozenSet[Formula], int] = {}
        self._on_new_state = on_new_state
        self._tick = tick
        self._initial: Optional[List[int]] = None

    @property
    def initial(self) -> List[int]:
        """Ids of the states containing the formula"""
        if self._initial is None:
            self._initial = [self._add(formulas) for formulas in expand(frozenset([self.formula]), self._tick)]
        return self._initial

    def successors(self, state_id: int) -> List[int]:
        if state_id not in self.edges:
            obligations = self.states[state_id].obligations
            self.edges[state_id] = [self._add(formulas) for formulas in expand(obligations, self._tick)]
        return self.edges[state_id]

    def accepts(self, state_id: int, fairness_index: int) -> bool:
        return bool(self.masks[state_id] >> fairness_index & 1)

    def assignment(self, state_id: int) -> Dict[str, bool]:
        """Full assignment over the formula's propositions; unconstrained ones are false"""
        literals = self.states[state_id].literals
        return {name: literals.get(name, False) for name in self.propositions}

    @property
    def edge_count(self) -> int:
        return sum(len(targets) for targets in self.edges.values())

    def _add(self, formulas: FrozenSet[Formula]) -> int:
        state_id = self._index.get(formulas)
        if state_id is not None:
            return state_id

        state_id = len(self.states)
        self._index[formulas] = state_id
        self.states.append(TableauState(formulas))
        self.masks.append(self._mask(formulas))
        if self._on_new_state is not None:
            self._on_new_state(len(self.states))
        return state_id

    def _mask(self, formulas: FrozenSet[Formula]) -> int:
        mask = 0
        for i, pending in enumerate(self.fairness):
            fulfilled = pending.operand if isinstance(pending, Eventually) else pending.right
            if pending not in formulas or fulfilled in formulas:
                mask |= 1 << i
        return mask

    def __len__(self) -> int:
        return len(self.states)

    def __repr__(self) -> str:
        return f"<TableauGraph({len(self.states)} states, {len(self.fairness)} fairness sets)>"
