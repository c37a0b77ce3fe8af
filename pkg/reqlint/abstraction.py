"""
Boolean Abstraction of Numerical Constraints

Reduces satisfiability of LTL formulas with ``x < c`` / ``x = c`` atoms to
propositional LTL satisfiability. For a variable compared against constants
c_1 < ... < c_k the real line is cut into 2k + 1 regions::

    r0: x < c_1    r1: x = c_1    r2: c_1 < x < c_2    ...    r2k: x > c_k

Each region becomes a fresh proposition ``__<var>__r<j>``. Exactly one region
per variable holds at every instant; numerical atoms are replaced by the
disjunction of the regions in which they are true.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from reqlint.ltl.formula import (
    TRUE,
    And,
    Binary,
    BoolProp,
    Formula,
    Globally,
    Not,
    NumConstraint,
    Unary,
    conjunction,
    disjunction,
    format_fraction,
    numeric_variables,
    propositions,
)
from reqlint.ltl.lasso import LassoTrace, State
from reqlint.ltl.transforms import evaluation_order

logger = logging.getLogger("reqlint.abstraction")

REGION_PREFIX = "__"


class AbstractionError(Exception):
    """Base class for abstraction errors"""


class MixedUse(AbstractionError):
    """An identifier is used both as a proposition and as a numerical variable"""

    def __init__(self, name: str):
        super().__init__(f"{name!r} is used both as a boolean proposition and a numerical variable")
        self.name = name


class NameCollision(AbstractionError):
    """A user proposition has the name of a generated region proposition"""

    def __init__(self, name: str):
        super().__init__(f"Proposition {name!r} collides with a generated region name")
        self.name = name


class NoActiveRegion(AbstractionError):
    """A witness state does not select exactly one region of a variable"""

    def __init__(self, var: str, position: int, active: Tuple[str, ...]):
        super().__init__(
            f"State {position} activates {len(active)} regions of {var!r} "
            f"({', '.join(active) or 'none'}), expected exactly one"
        )
        self.var = var
        self.position = position
        self.active = active


@dataclass(frozen=True)
class Signature:
    """Numerical variables, their constants and the boolean propositions of a formula"""

    variables: Tuple[str, ...]
    constants: Mapping[str, Tuple[Fraction, ...]]
    propositions: Tuple[str, ...]


def extract_signature(formula: Formula) -> Signature:
    """
    Collect the numerical variables and comparison constants of a formula

    Args:
        formula: LTL formula with numerical constraint atoms

    Returns:
        Signature: Variables in first-occurrence order, each with its sorted,
            deduplicated constants (compared as exact rationals)

    Raises:
        MixedUse: If a name is both a proposition and a numerical variable
    """
    props = propositions(formula)
    variables = numeric_variables(formula)
    shared = set(props) & set(variables)
    if shared:
        raise MixedUse(next(name for name in props if name in shared))

    values: Dict[str, set] = {var: set() for var in variables}
    for node in evaluation_order(formula):
        if isinstance(node, NumConstraint):
            values[node.var].add(node.value)
    constants = {var: tuple(sorted(values[var])) for var in variables}
    return Signature(variables, constants, props)


def region_name(var: str, index: int) -> str:
    return f"{REGION_PREFIX}{var}__r{index}"


@dataclass(frozen=True)
class AbstractionMap:
    """Region propositions of every numerical variable"""

    constants: Mapping[str, Tuple[Fraction, ...]] = field(default_factory=dict)

    @property
    def variables(self) -> Tuple[str, ...]:
        return tuple(self.constants)

    def regions(self, var: str) -> Tuple[str, ...]:
        """Region propositions p_0 .. p_2k of a variable"""
        return tuple(region_name(var, j) for j in range(2 * len(self.constants[var]) + 1))

    @property
    def propositions(self) -> Tuple[str, ...]:
        return tuple(name for var in self.variables for name in self.regions(var))

    def region_contains(self, var: str, index: int, value) -> bool:
        """True if ``value`` lies in region ``index`` of ``var``"""
        cs = self.constants[var]
        k = len(cs)
        value = Fraction(value)
        if not 0 <= index <= 2 * k:
            raise IndexError(f"{var!r} has no region {index}")
        if index == 0:
            return value < cs[0]
        if index == 2 * k:
            return value > cs[-1]
        i = (index + 1) // 2
        if index % 2 == 1:
            return value == cs[i - 1]
        return cs[i - 1] < value < cs[i]

    def representative(self, var: str, index: int) -> Fraction:
        """A value inside region ``index``: c_1 - 1, c_i, a midpoint, or c_k + 1"""
        cs = self.constants[var]
        k = len(cs)
        if not 0 <= index <= 2 * k:
            raise IndexError(f"{var!r} has no region {index}")
        if index == 0:
            return cs[0] - 1
        if index == 2 * k:
            return cs[-1] + 1
        i = (index + 1) // 2
        if index % 2 == 1:
            return cs[i - 1]
        return (cs[i - 1] + cs[i]) / 2

    def atom_regions(self, atom: NumConstraint) -> Tuple[str, ...]:
        """Region propositions in which a numerical atom is true"""
        cs = self.constants[atom.var]
        i = cs.index(atom.value) + 1
        names = self.regions(atom.var)
        if atom.rel == "<":
            return names[: 2 * i - 1]
        return (names[2 * i - 1],)

    @property
    def reverse_index(self) -> Dict[Tuple[str, str, str], Tuple[str, ...]]:
        """(var, rel, const) -> region propositions making the atom true"""
        index = {}
        for var in self.variables:
            for value in self.constants[var]:
                for rel in ("<", "="):
                    atom = NumConstraint(var, rel, format_fraction(value))
                    index[(var, rel, atom.const)] = self.atom_regions(atom)
        return index

    def substitute_atom(self, atom: NumConstraint) -> Formula:
        return disjunction(BoolProp(name) for name in self.atom_regions(atom))

    def exactly_one(self, var: str) -> Formula:
        """At least one region holds and no two hold together"""
        names = [BoolProp(name) for name in self.regions(var)]
        exclusions = [
            Not(And(names[i], names[j]))
            for i in range(len(names))
            for j in range(i + 1, len(names))
        ]
        return And(disjunction(names), conjunction(exclusions))

    def active_region(self, var: str, state: State, position: int = 0) -> int:
        """Index of the single region of ``var`` that holds in ``state``"""
        active = [name for name in self.regions(var) if state.get(name, False)]
        if len(active) != 1:
            raise NoActiveRegion(var, position, tuple(active))
        return self.regions(var).index(active[0])

    def __repr__(self) -> str:
        return f"<AbstractionMap({len(self.variables)} variables, {len(self.propositions)} regions)>"


@dataclass(frozen=True)
class AbstractionResult:
    """Boolean abstraction of an LTL formula with numerical atoms

    Attributes:
        phi_prime: Formula with every numerical atom replaced by region propositions
        q_m: Global exactly-one constraint over the region propositions
        map: Region definitions
        source: The abstracted formula
    """

    phi_prime: Formula
    q_m: Formula
    map: AbstractionMap
    source: Optional[Formula] = None

    @property
    def query(self) -> Formula:
        """The formula whose satisfiability decides the source formula"""
        if not self.map.variables:
            return self.phi_prime
        return And(self.q_m, self.phi_prime)


def substitute(formula: Formula, amap: AbstractionMap) -> Formula:
    """Replace every numerical atom of ``formula`` by its region disjunction"""
    rebuilt: Dict[Formula, Formula] = {}
    for node in evaluation_order(formula):
        if isinstance(node, NumConstraint):
            rebuilt[node] = amap.substitute_atom(node)
        elif isinstance(node, Unary):
            rebuilt[node] = type(node)(rebuilt[node.operand])
        elif isinstance(node, Binary):
            rebuilt[node] = type(node)(rebuilt[node.left], rebuilt[node.right])
        else:
            rebuilt[node] = node
    return rebuilt[formula]


def build_abstraction(formula: Formula) -> AbstractionResult:
    """
    Build the boolean abstraction of a formula

    Args:
        formula: LTL formula with numerical constraint atoms

    Returns:
        AbstractionResult: phi_prime, q_m and the region map

    Raises:
        MixedUse: If a name is both a proposition and a numerical variable
        NameCollision: If a user proposition looks like a region proposition
    """
    signature = extract_signature(formula)
    for name in signature.propositions:
        if name.startswith(REGION_PREFIX):
            raise NameCollision(name)

    amap = AbstractionMap(dict(signature.constants))
    if not amap.variables:
        return AbstractionResult(formula, Globally(TRUE), amap, formula)

    phi_prime = substitute(formula, amap)
    q_m = Globally(conjunction(amap.exactly_one(var) for var in amap.variables))
    logger.debug(
        f"Abstracted {len(amap.variables)} variables into {len(amap.propositions)} region propositions"
    )
    return AbstractionResult(phi_prime, q_m, amap, formula)


def concretize_witness(trace: LassoTrace, amap: AbstractionMap) -> LassoTrace:
    """
    Attach a representative value of every numerical variable to each state

    Args:
        trace: Witness over the region propositions
        amap: Region definitions

    Returns:
        LassoTrace: Same trace where each state also maps every variable to a
            value of its active region

    Raises:
        NoActiveRegion: If a state does not select exactly one region
    """

    def concretize(states: Iterable[State], offset: int) -> List[Dict]:
        result = []
        for position, state in enumerate(states, start=offset):
            values = dict(state)
            for var in amap.variables:
                values[var] = amap.representative(var, amap.active_region(var, state, position))
            result.append(values)
        return result

    return LassoTrace(
        tuple(concretize(trace.prefix, 0)),
        tuple(concretize(trace.loop, len(trace.prefix))),
    )
