"""
LTL Formula Representation

Immutable formula nodes over boolean propositions and numerical constraint atoms,
structural helpers, and the text printer shared by the neutral and SMV dialects.
"""

import re
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Iterable, Iterator, List, Tuple, Union

IDENTIFIER_PATTERN = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
RELATIONS = ("<", "=")

NEUTRAL = "neutral"
SMV = "smv"


class LtlError(Exception):
    """Base class for formula-level errors"""


class Formula:
    """Base class for all formula nodes.

    Nodes are frozen dataclasses. The structural hash is computed once at
    construction so that sets of formulas (closures, tableau states) stay cheap.
    """

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash((type(self).__name__,) + self._values()))

    def _values(self) -> tuple:
        return tuple(getattr(self, name) for name in self.__dataclass_fields__)

    def children(self) -> Tuple["Formula", ...]:
        return ()

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if type(self) is not type(other) or self._hash != other._hash:
            return False
        return self._values() == other._values()

    def __str__(self) -> str:
        return format_formula(self)


@dataclass(frozen=True, eq=False)
class TrueConst(Formula):
    """The constant true"""


@dataclass(frozen=True, eq=False)
class FalseConst(Formula):
    """The constant false"""


TRUE = TrueConst()
FALSE = FalseConst()


@dataclass(frozen=True, eq=False)
class BoolProp(Formula):
    """Boolean proposition"""

    name: str

    def __post_init__(self):
        if not IDENTIFIER_PATTERN.match(self.name):
            raise ValueError(f"Invalid proposition name: {self.name!r}")
        super().__post_init__()


@dataclass(frozen=True, eq=False)
class NumConstraint(Formula):
    """Numerical constraint atom ``var rel const`` with rel in {<, =}

    The constant is held as a canonical decimal string; ``value`` gives its
    exact rational interpretation.
    """

    var: str
    rel: str
    const: str

    def __post_init__(self):
        if not IDENTIFIER_PATTERN.match(self.var):
            raise ValueError(f"Invalid variable name: {self.var!r}")
        if self.rel not in RELATIONS:
            raise ValueError(f"Unsupported relation {self.rel!r} (expected one of {RELATIONS})")
        object.__setattr__(self, "const", canonical_constant(self.const))
        super().__post_init__()

    @property
    def value(self) -> Fraction:
        return Fraction(self.const)


Atom = Union[BoolProp, NumConstraint]


@dataclass(frozen=True, eq=False)
class Unary(Formula):
    operand: Formula

    symbol = ""

    def children(self) -> Tuple[Formula, ...]:
        return (self.operand,)


@dataclass(frozen=True, eq=False)
class Binary(Formula):
    left: Formula
    right: Formula

    symbol = ""

    def children(self) -> Tuple[Formula, ...]:
        return (self.left, self.right)


class Not(Unary):
    symbol = "!"


class Next(Unary):
    symbol = "X"


class Eventually(Unary):
    symbol = "F"


class Globally(Unary):
    symbol = "G"


class And(Binary):
    symbol = "&"


class Or(Binary):
    symbol = "|"


class Implies(Binary):
    symbol = "->"


class Until(Binary):
    symbol = "U"


class Release(Binary):
    """``left R right``: right holds up to and including the first left, or forever"""

    symbol = "R"


class WeakUntil(Binary):
    symbol = "W"


TEMPORAL_KEYWORDS = ("X", "F", "G", "U", "R", "W", "V")


def canonical_constant(value: Union[str, int, Decimal, Fraction]) -> str:
    """
    Normalize a real constant to its canonical decimal string

    Args:
        value: Decimal literal, integer, Decimal or terminating Fraction

    Returns:
        str: Canonical text ("20", "0.1", "-3.25")
    """
    if isinstance(value, Fraction):
        text = format_fraction(value)
        if "/" in text:
            raise ValueError(f"Constant {value} has no finite decimal expansion")
        return text
    try:
        number = Decimal(str(value).strip())
    except InvalidOperation:
        raise ValueError(f"Invalid numerical constant: {value!r}") from None
    if not number.is_finite():
        raise ValueError(f"Invalid numerical constant: {value!r}")
    if number == 0:
        return "0"
    return format(number.normalize(), "f")


def format_fraction(value: Fraction) -> str:
    """Render a rational as a decimal string, or ``p/q`` when it does not terminate"""
    denominator = value.denominator
    twos = fives = 0
    while denominator % 2 == 0:
        denominator //= 2
        twos += 1
    while denominator % 5 == 0:
        denominator //= 5
        fives += 1
    if denominator != 1:
        return f"{value.numerator}/{value.denominator}"

    scale = max(twos, fives)
    scaled = abs(value) * 10 ** scale
    digits = str(scaled.numerator).rjust(scale + 1, "0")
    sign = "-" if value < 0 else ""
    if scale == 0:
        return sign + digits
    return f"{sign}{digits[:-scale]}.{digits[-scale:]}"


def subformulas(formula: Formula) -> Iterator[Formula]:
    """Pre-order, left-to-right traversal (duplicates included)"""
    stack = [formula]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(node.children()))


def size(formula: Formula) -> int:
    """Number of nodes in the formula tree"""
    return sum(1 for _ in subformulas(formula))


def propositions(formula: Formula) -> Tuple[str, ...]:
    """Boolean proposition names in first-occurrence order"""
    seen = {}
    for node in subformulas(formula):
        if isinstance(node, BoolProp):
            seen.setdefault(node.name, None)
    return tuple(seen)


def numeric_variables(formula: Formula) -> Tuple[str, ...]:
    """Numerical variable names in first-occurrence order"""
    seen = {}
    for node in subformulas(formula):
        if isinstance(node, NumConstraint):
            seen.setdefault(node.var, None)
    return tuple(seen)


def is_boolean(formula: Formula) -> bool:
    """True if the formula contains no numerical constraint atoms"""
    return not any(isinstance(node, NumConstraint) for node in subformulas(formula))


def is_atomic(formula: Formula) -> bool:
    return isinstance(formula, (BoolProp, NumConstraint, TrueConst, FalseConst))


def conjunction(items: Iterable[Formula]) -> Formula:
    """Left-folded binary conjunction; true for no items"""
    result = None
    for item in items:
        result = item if result is None else And(result, item)
    return TRUE if result is None else result


def disjunction(items: Iterable[Formula]) -> Formula:
    """Left-folded binary disjunction; false for no items"""
    result = None
    for item in items:
        result = item if result is None else Or(result, item)
    return FALSE if result is None else result


def weak_until(left: Formula, right: Formula) -> Formula:
    """``left W right`` spelled with U and G only"""
    return Or(Until(left, right), Globally(left))


def format_formula(formula: Formula, dialect: str = NEUTRAL) -> str:
    """
    Print a formula in the neutral LTL syntax or the SMV LTLSPEC syntax

    Binary operators are always parenthesized. A left-nested chain of one
    associative operator prints as a single group, ``(a & b & c)``, which the
    left-associative parser folds back into the same tree.

    Args:
        formula: Formula to print
        dialect: "neutral" or "smv"

    Returns:
        str: Formula text
    """
    if dialect not in (NEUTRAL, SMV):
        raise ValueError(f"Unknown dialect: {dialect}")
    return _format(formula, dialect == SMV)


def _format(formula: Formula, smv: bool) -> str:
    if isinstance(formula, TrueConst):
        return "TRUE" if smv else "true"
    if isinstance(formula, FalseConst):
        return "FALSE" if smv else "false"
    if isinstance(formula, BoolProp):
        return formula.name
    if isinstance(formula, NumConstraint):
        return f"({formula.var} {formula.rel} {formula.const})"
    if isinstance(formula, Not):
        inner = _format(formula.operand, smv)
        if is_atomic(formula.operand) or isinstance(formula.operand, Binary):
            return f"!{inner}"
        return f"!({inner})"
    if isinstance(formula, Unary):
        return f"{formula.symbol} {_format(formula.operand, smv)}"
    if isinstance(formula, WeakUntil) and smv:
        # SMV has no weak until: a W b == b V (a | b)
        return _format(Release(formula.right, Or(formula.left, formula.right)), smv)
    if isinstance(formula, (And, Or)):
        items = chain_operands(formula)
        return "(" + f" {formula.symbol} ".join(_format(item, smv) for item in items) + ")"
    if isinstance(formula, Binary):
        symbol = "V" if smv and isinstance(formula, Release) else formula.symbol
        return f"({_format(formula.left, smv)} {symbol} {_format(formula.right, smv)})"
    raise LtlError(f"Unsupported formula node: {formula!r}")


def chain_operands(formula: Binary) -> List[Formula]:
    """Operands of a left-nested chain of the same binary operator, in order"""
    kind = type(formula)
    operands = []
    node = formula
    while type(node) is kind:
        operands.append(node.right)
        node = node.left
    operands.append(node)
    operands.reverse()
    return operands
