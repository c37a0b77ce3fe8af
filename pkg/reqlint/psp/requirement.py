"""
Requirement Data Structures

Property Specification Pattern instances, requirements, and requirement sets.
"""

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from reqlint.ltl.formula import (
    And,
    BoolProp,
    Formula,
    Not,
    NumConstraint,
    Or,
    numeric_variables,
    propositions,
    subformulas,
)

ID_PATTERN = re.compile(r"[A-Za-z0-9_.-]+\Z")


class PspError(Exception):
    """Base class for requirement-level errors"""


class ParseError(PspError):
    """A requirement line does not follow the pattern grammar"""

    def __init__(self, message: str, line: int, column: int, expected: Tuple[str, ...] = (), text: str = ""):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column
        self.expected = expected
        self.text = text


class DuplicateId(PspError):
    """Two requirements share an identifier"""

    def __init__(self, requirement_id: str, line: int = 0, first_line: int = 0):
        super().__init__(f"Duplicate requirement id {requirement_id!r} (line {line}, first defined on line {first_line})")
        self.requirement_id = requirement_id
        self.line = line
        self.first_line = first_line


class UnsupportedCombination(PspError):
    """No LTL mapping exists for a (scope, pattern) pair"""


class Scope(str, Enum):
    GLOBALLY = "globally"
    BEFORE = "before"
    AFTER = "after"
    BETWEEN = "between"
    AFTER_UNTIL = "after_until"


class Pattern(str, Enum):
    UNIVERSALITY = "universality"
    ABSENCE = "absence"
    EXISTENCE = "existence"
    BOUNDED_EXISTENCE = "bounded_existence"
    RESPONSE = "response"
    PRECEDENCE = "precedence"
    RESPONSE_CHAIN = "response_chain"
    PRECEDENCE_CHAIN = "precedence_chain"


# Patterns whose first slot is a triggering condition
TRIGGER_PATTERNS = frozenset(
    {Pattern.RESPONSE, Pattern.PRECEDENCE, Pattern.RESPONSE_CHAIN, Pattern.PRECEDENCE_CHAIN}
)

_SCOPE_SLOTS = {
    Scope.GLOBALLY: (),
    Scope.BEFORE: ("r",),
    Scope.AFTER: ("q",),
    Scope.BETWEEN: ("q", "r"),
    Scope.AFTER_UNTIL: ("q", "r"),
}

_PATTERN_SLOTS = {
    Pattern.UNIVERSALITY: ("p",),
    Pattern.ABSENCE: ("p",),
    Pattern.EXISTENCE: ("p",),
    Pattern.BOUNDED_EXISTENCE: ("p",),
    Pattern.RESPONSE: ("p", "s"),
    Pattern.PRECEDENCE: ("p", "s"),
    Pattern.RESPONSE_CHAIN: ("p", "s", "t"),
    Pattern.PRECEDENCE_CHAIN: ("p", "s", "t"),
}

_PAYLOAD_NODES = (BoolProp, NumConstraint, Not, And, Or)


@dataclass(frozen=True)
class PspInstance:
    """A (scope, pattern) pair with its payload expressions

    Slots follow the catalog naming: ``p`` is the main (or triggering) condition,
    ``s`` and ``t`` the responses or preceding events, ``q`` opens a scope and
    ``r`` closes it (the Before scope only has ``r``).
    """

    scope: Scope
    pattern: Pattern
    p: Formula
    s: Optional[Formula] = None
    t: Optional[Formula] = None
    q: Optional[Formula] = None
    r: Optional[Formula] = None
    bound: Optional[int] = None

    def __post_init__(self):
        required = set(_SCOPE_SLOTS[self.scope]) | set(_PATTERN_SLOTS[self.pattern])
        for slot in ("p", "s", "t", "q", "r"):
            value = getattr(self, slot)
            if slot in required and value is None:
                raise ValueError(f"{self.scope.value}/{self.pattern.value} requires slot {slot!r}")
            if slot not in required and value is not None:
                raise ValueError(f"{self.scope.value}/{self.pattern.value} has no slot {slot!r}")
            if value is not None:
                for node in subformulas(value):
                    if not isinstance(node, _PAYLOAD_NODES):
                        raise ValueError(f"Slot {slot!r} must be a boolean combination of atoms")

        if self.pattern is Pattern.BOUNDED_EXISTENCE:
            if self.bound is None or self.bound < 1:
                raise ValueError("Bounded existence requires a bound k >= 1")
        elif self.bound is not None:
            raise ValueError(f"{self.pattern.value} takes no bound")

    @property
    def slots(self) -> Dict[str, Formula]:
        """Non-empty payload slots in catalog order"""
        return {
            slot: getattr(self, slot)
            for slot in ("p", "s", "t", "q", "r")
            if getattr(self, slot) is not None
        }

    @property
    def trigger(self) -> Optional[Formula]:
        return self.p if self.pattern in TRIGGER_PATTERNS else None


@dataclass(frozen=True)
class Requirement:
    """A single identified requirement"""

    id: str
    source_text: str
    psp: PspInstance
    line: int = 0

    def __post_init__(self):
        if not ID_PATTERN.match(self.id):
            raise ValueError(f"Invalid requirement id: {self.id!r}")

    @property
    def trigger(self) -> Optional[Formula]:
        return self.psp.trigger

    @property
    def variables(self) -> Tuple[str, ...]:
        """Boolean propositions and numerical variables, in first-occurrence order"""
        seen = {}
        for payload in self.psp.slots.values():
            for name in propositions(payload) + numeric_variables(payload):
                seen.setdefault(name, None)
        return tuple(seen)


@dataclass
class RequirementSet:
    """Ordered collection of requirements with unique ids"""

    requirements: List[Requirement] = field(default_factory=list)

    def __post_init__(self):
        self.requirements = list(self.requirements)
        first_seen = {}
        for requirement in self.requirements:
            if requirement.id in first_seen:
                raise DuplicateId(requirement.id, requirement.line, first_seen[requirement.id])
            first_seen[requirement.id] = requirement.line

    @property
    def ids(self) -> List[str]:
        return [requirement.id for requirement in self.requirements]

    def get(self, requirement_id: str) -> Optional[Requirement]:
        for requirement in self.requirements:
            if requirement.id == requirement_id:
                return requirement
        return None

    def subset(self, ids: Iterable[str]) -> "RequirementSet":
        """Requirements whose id is in ``ids``, in original order"""
        keep = set(ids)
        return RequirementSet([r for r in self.requirements if r.id in keep])

    def without(self, ids: Iterable[str]) -> "RequirementSet":
        """Requirements whose id is not in ``ids``, in original order"""
        drop = set(ids)
        return RequirementSet([r for r in self.requirements if r.id not in drop])

    def __iter__(self) -> Iterator[Requirement]:
        return iter(self.requirements)

    def __len__(self) -> int:
        return len(self.requirements)

    def __repr__(self) -> str:
        return f"<RequirementSet({len(self)} requirements)>"
