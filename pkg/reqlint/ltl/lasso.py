"""
Lasso Traces

Ultimately periodic words ``prefix . loop^w`` and the reference LTL semantics
over them. The evaluator is independent of the tableau engine and is used to
re-verify every satisfiability witness.
"""

from dataclasses import dataclass
from fractions import Fraction
from numbers import Real
from typing import Any, Dict, List, Mapping, Sequence, Tuple

from reqlint.ltl.formula import (
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
    format_fraction,
)
from reqlint.ltl.transforms import evaluation_order

State = Mapping[str, Any]


class UncoveredProposition(LtlError):
    """A trace state does not assign a proposition of the formula"""

    def __init__(self, name: str, position: int):
        super().__init__(f"State {position} does not assign {name!r}")
        self.name = name
        self.position = position


@dataclass(frozen=True)
class LassoTrace:
    """Finite prefix followed by an infinitely repeated, non-empty loop

    States map proposition names to booleans; concretized traces additionally
    map numerical variables to exact values.
    """

    prefix: Tuple[State, ...]
    loop: Tuple[State, ...]

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(dict(state) for state in self.prefix))
        object.__setattr__(self, "loop", tuple(dict(state) for state in self.loop))
        if not self.loop:
            raise ValueError("Lasso loop must contain at least one state")

    @property
    def states(self) -> Tuple[State, ...]:
        return self.prefix + self.loop

    def successor(self, position: int) -> int:
        """Index of the position following ``position`` in the infinite word"""
        following = position + 1
        return following if following < len(self) else len(self.prefix)

    def unrolled(self) -> "LassoTrace":
        """Same infinite word with the loop unrolled once into the prefix"""
        return LassoTrace(self.prefix + self.loop, self.loop)

    def to_dict(self) -> Dict[str, List[Dict[str, Any]]]:
        """JSON-friendly form; exact numbers are written as decimal strings"""
        return {
            "prefix": [_state_to_dict(state) for state in self.prefix],
            "loop": [_state_to_dict(state) for state in self.loop],
        }

    def __len__(self) -> int:
        return len(self.prefix) + len(self.loop)

    def __repr__(self) -> str:
        return f"<LassoTrace(prefix={len(self.prefix)}, loop={len(self.loop)})>"


def _state_to_dict(state: State) -> Dict[str, Any]:
    result = {}
    for name in sorted(state):
        value = state[name]
        if isinstance(value, bool):
            result[name] = value
        elif isinstance(value, Fraction):
            result[name] = format_fraction(value)
        else:
            result[name] = str(value)
    return result


def eval_on_lasso(formula: Formula, trace: LassoTrace) -> bool:
    """
    Decide whether ``prefix . loop^w`` satisfies a formula

    Every subformula is evaluated at each of the |prefix| + |loop| positions,
    children first. Temporal operators are solved as fixpoints over the loop:
    least fixpoints for U and F, greatest fixpoints for R, W and G.

    Args:
        formula: Formula over boolean atoms (numerical atoms are accepted when the
            states carry numerical values)
        trace: Lasso trace covering every proposition of the formula

    Returns:
        bool: True if the trace is a model of the formula

    Raises:
        UncoveredProposition: If a state omits a proposition of the formula
    """
    return evaluate_positions(formula, trace)[formula][0]


def evaluate_positions(formula: Formula, trace: LassoTrace) -> Dict[Formula, List[bool]]:
    """Truth value of every subformula at every position of the trace"""
    states = trace.states
    n = len(states)
    successor = [trace.successor(i) for i in range(n)]
    values: Dict[Formula, List[bool]] = {}

    for node in evaluation_order(formula):
        if isinstance(node, TrueConst):
            row = [True] * n
        elif isinstance(node, FalseConst):
            row = [False] * n
        elif isinstance(node, BoolProp):
            row = [_lookup_bool(states, i, node.name) for i in range(n)]
        elif isinstance(node, NumConstraint):
            row = [_compare(states, i, node) for i in range(n)]
        elif isinstance(node, Not):
            row = [not v for v in values[node.operand]]
        elif isinstance(node, Next):
            inner = values[node.operand]
            row = [inner[successor[i]] for i in range(n)]
        elif isinstance(node, Eventually):
            inner = values[node.operand]
            row = _fixpoint(n, successor, lambda i, nxt: inner[i] or nxt, initial=False)
        elif isinstance(node, Globally):
            inner = values[node.operand]
            row = _fixpoint(n, successor, lambda i, nxt: inner[i] and nxt, initial=True)
        else:
            left, right = values[node.left], values[node.right]
            if isinstance(node, And):
                row = [a and b for a, b in zip(left, right)]
            elif isinstance(node, Or):
                row = [a or b for a, b in zip(left, right)]
            elif isinstance(node, Implies):
                row = [(not a) or b for a, b in zip(left, right)]
            elif isinstance(node, Until):
                row = _fixpoint(n, successor, lambda i, nxt: right[i] or (left[i] and nxt), initial=False)
            elif isinstance(node, WeakUntil):
                row = _fixpoint(n, successor, lambda i, nxt: right[i] or (left[i] and nxt), initial=True)
            elif isinstance(node, Release):
                row = _fixpoint(n, successor, lambda i, nxt: right[i] and (left[i] or nxt), initial=True)
            else:
                raise LtlError(f"Unsupported formula node: {node!r}")
        values[node] = row

    return values


def _fixpoint(n: int, successor: Sequence[int], step, initial: bool) -> List[bool]:
    # Backward sweeps; each sweep can only move values away from ``initial``,
    # so at most n + 1 sweeps are needed.
    row = [initial] * n
    changed = True
    while changed:
        changed = False
        for i in reversed(range(n)):
            value = step(i, row[successor[i]])
            if value != row[i]:
                row[i] = value
                changed = True
    return row


def _lookup_bool(states: Sequence[State], position: int, name: str) -> bool:
    try:
        value = states[position][name]
    except KeyError:
        raise UncoveredProposition(name, position) from None
    return bool(value)


def _compare(states: Sequence[State], position: int, atom: NumConstraint) -> bool:
    try:
        value = states[position][atom.var]
    except KeyError:
        raise UncoveredProposition(atom.var, position) from None
    if isinstance(value, bool) or not isinstance(value, Real):
        raise LtlError(f"State {position} gives no numerical value for {atom.var!r}")
    value = Fraction(value)
    if atom.rel == "<":
        return value < atom.value
    return value == atom.value
