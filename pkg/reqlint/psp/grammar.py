"""
Structured-English Requirement Grammar

Parses ``.req`` files (one ``ID: SENTENCE`` per line) into requirement sets and
prints requirements back as sentences. Keywords are case-insensitive,
identifiers are case-sensitive, the trailing period is optional and lines
starting with ``#`` are comments.

Payloads are boolean combinations (``and``, ``or``, ``not``, parentheses) of
propositions and comparisons ``x OP c``. Comparisons other than ``<`` and ``=``
are rewritten into those two relations at parse time.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import pyparsing as pp

from reqlint.ltl.formula import (
    TEMPORAL_KEYWORDS,
    And,
    BoolProp,
    Formula,
    Not,
    NumConstraint,
    Or,
)
from reqlint.ltl.syntax import expected_tokens
from reqlint.psp.requirement import (
    DuplicateId,
    ParseError,
    Pattern,
    PspError,
    PspInstance,
    Requirement,
    RequirementSet,
    Scope,
)

pp.ParserElement.enable_packrat()

logger = logging.getLogger("reqlint.grammar")

RESERVED_WORDS = ("and", "or", "not", "holds", "held", "eventually", "until", "then", "if")


@dataclass
class _ScopeMatch:
    scope: Scope
    q: Optional[Formula] = None
    r: Optional[Formula] = None


@dataclass
class _PatternMatch:
    pattern: Pattern
    p: Formula
    s: Optional[Formula] = None
    t: Optional[Formula] = None
    bound: Optional[int] = None


def desugar_comparison(var: str, op: str, const: str) -> Formula:
    """
    Rewrite ``var op const`` using only the ``<`` and ``=`` relations

    Args:
        var: Numerical variable name
        op: One of <, <=, >, >=, =, ==, !=, and the unicode forms of <=, >=, !=
        const: Decimal constant text

    Returns:
        Formula: Equivalent boolean combination of NumConstraint atoms
    """
    less = NumConstraint(var, "<", const)
    equal = NumConstraint(var, "=", const)
    if op == "<":
        return less
    elif op in ("=", "=="):
        return equal
    elif op in ("<=", "≤"):
        return Or(less, equal)
    elif op == ">":
        return Not(Or(less, equal))
    elif op in (">=", "≥"):
        return Not(less)
    elif op in ("!=", "≠"):
        return Not(equal)
    raise ValueError(f"Unknown comparison operator: {op}")


def _kw(phrase: str) -> pp.ParserElement:
    return pp.Suppress(pp.And([pp.CaselessKeyword(word) for word in phrase.split()]))


def _fold(node_cls):
    def action(tokens):
        items = list(tokens)
        result = items[0]
        for item in items[1:]:
            result = node_cls(result, item)
        return result

    return action


def _chain_action(single: Pattern, chain: Pattern):
    def action(tokens):
        if len(tokens) == 3:
            return _PatternMatch(chain, tokens[0], tokens[1], tokens[2])
        return _PatternMatch(single, tokens[0], tokens[1])

    return action


def _build_payload_grammar() -> Tuple[pp.ParserElement, pp.ParserElement]:
    reserved = pp.MatchFirst(
        [pp.CaselessKeyword(word) for word in RESERVED_WORDS]
        + [pp.Keyword(word) for word in TEMPORAL_KEYWORDS + ("true", "false", "TRUE", "FALSE")]
    )
    name = (~reserved + pp.Regex(r"(?!__)[A-Za-z_][A-Za-z0-9_]*")).set_name("identifier")
    number = pp.Regex(r"-?\d+(?:\.\d+)?").set_name("number")
    comparator = pp.one_of("< <= > >= = == != ≤ ≥ ≠")

    comparison = (name + comparator + number).set_name("comparison")
    comparison.set_parse_action(lambda t: desugar_comparison(t[0], t[1], t[2]))
    proposition = name.copy().set_parse_action(lambda t: BoolProp(t[0]))

    and_op = pp.Suppress(pp.CaselessKeyword("and"))
    or_op = pp.Suppress(pp.CaselessKeyword("or"))

    expr = pp.Forward().set_name("expression")
    negation = pp.Forward().set_name("atom")
    negation <<= (
        (pp.Suppress(pp.CaselessKeyword("not")) + negation).set_parse_action(lambda t: Not(t[0]))
        | comparison
        | proposition
        | pp.Suppress("(") + expr + pp.Suppress(")")
    )
    conjunction = (negation + pp.ZeroOrMore(and_op + negation)).set_parse_action(_fold(And))
    expr <<= (conjunction + pp.ZeroOrMore(or_op + conjunction)).set_parse_action(_fold(Or))

    # "Between Q and R": a top-level "and" in Q must be parenthesized
    expr_no_and = (negation + pp.ZeroOrMore(or_op + negation)).set_parse_action(_fold(Or))
    return expr, expr_no_and.set_name("expression")


def _build_line_grammar() -> pp.ParserElement:
    expr, expr_no_and = _build_payload_grammar()
    comma = pp.Suppress(",")

    globally = (_kw("globally") + comma).set_parse_action(lambda: _ScopeMatch(Scope.GLOBALLY))
    before = (_kw("before") + expr + comma).set_parse_action(
        lambda t: _ScopeMatch(Scope.BEFORE, r=t[0])
    )
    after_until = (_kw("after") + expr + _kw("until") + expr + comma).set_parse_action(
        lambda t: _ScopeMatch(Scope.AFTER_UNTIL, q=t[0], r=t[1])
    )
    after = (_kw("after") + expr + comma).set_parse_action(lambda t: _ScopeMatch(Scope.AFTER, q=t[0]))
    between = (_kw("between") + expr_no_and + _kw("and") + expr + comma).set_parse_action(
        lambda t: _ScopeMatch(Scope.BETWEEN, q=t[0], r=t[1])
    )
    scope = (globally | before | after_until | after | between).set_name("scope")

    bound = pp.Regex(r"[1-9][0-9]*").set_name("positive integer")
    bounded_existence = (
        _kw("transitions to states in which")
        + expr
        + _kw("holds occur at most")
        + bound
        + pp.Suppress(pp.CaselessKeyword("times") | pp.CaselessKeyword("time"))
    ).set_parse_action(lambda t: _PatternMatch(Pattern.BOUNDED_EXISTENCE, t[0], bound=int(t[1])))

    trigger = _kw("it is always the case that if") + expr + _kw("holds") + comma + _kw("then") + expr
    response = (
        trigger + _kw("eventually holds") + pp.Optional(_kw("and is succeeded by") + expr)
    ).set_parse_action(_chain_action(Pattern.RESPONSE, Pattern.RESPONSE_CHAIN))
    precedence = (
        trigger + _kw("previously held") + pp.Optional(_kw("and was followed by") + expr)
    ).set_parse_action(_chain_action(Pattern.PRECEDENCE, Pattern.PRECEDENCE_CHAIN))
    universality = (_kw("it is always the case that") + expr + _kw("holds")).set_parse_action(
        lambda t: _PatternMatch(Pattern.UNIVERSALITY, t[0])
    )
    absence = (_kw("it is never the case that") + expr + _kw("holds")).set_parse_action(
        lambda t: _PatternMatch(Pattern.ABSENCE, t[0])
    )
    existence = (expr + _kw("eventually holds")).set_parse_action(
        lambda t: _PatternMatch(Pattern.EXISTENCE, t[0])
    )
    pattern = (
        bounded_existence | response | precedence | universality | absence | existence
    ).set_name("pattern")

    requirement_id = pp.Regex(r"[A-Za-z0-9_.-]+").set_name("requirement id")
    return requirement_id + pp.Suppress(":") + scope + pattern + pp.Optional(pp.Suppress("."))


_LINE = _build_line_grammar()


def parse_requirement(line: str, line_number: int = 1) -> Requirement:
    """
    Parse a single ``ID: SENTENCE`` line

    Args:
        line: Requirement line (no comment or blank lines)
        line_number: 1-based line number used in errors

    Returns:
        Requirement: Parsed requirement

    Raises:
        ParseError: If the line does not follow the grammar
    """
    text = line.strip()
    try:
        req_id, scope, pattern = _LINE.parse_string(text, parse_all=True)
        psp = PspInstance(
            scope=scope.scope,
            pattern=pattern.pattern,
            p=pattern.p,
            s=pattern.s,
            t=pattern.t,
            q=scope.q,
            r=scope.r,
            bound=pattern.bound,
        )
        return Requirement(id=req_id, source_text=text, psp=psp, line=line_number)
    except pp.ParseException as exc:
        column = exc.col + (len(line) - len(line.lstrip()))
        raise ParseError(exc.msg, line_number, column, expected_tokens(exc.msg), text) from None
    except RecursionError:
        pp.ParserElement.reset_cache()
        raise ParseError("nesting too deep", line_number, 1, (), text) from None
    except ValueError as exc:
        raise ParseError(str(exc), line_number, 1, (), text) from None


def _requirement_lines(text: str):
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield number, line


def parse_requirements(text: str) -> RequirementSet:
    """
    Parse a requirements file, failing on the first error

    Args:
        text: Contents of a ``.req`` file

    Returns:
        RequirementSet: Requirements in file order

    Raises:
        ParseError: On the first malformed line
        DuplicateId: If two lines share an id
    """
    requirements = [parse_requirement(line, number) for number, line in _requirement_lines(text)]
    return RequirementSet(requirements)


def parse_requirement_lines(text: str) -> Tuple[RequirementSet, List[PspError]]:
    """
    Parse a requirements file, collecting every per-line error

    Malformed lines and repeated ids are reported and left out of the
    returned set; the remaining requirements keep their file order.

    Args:
        text: Contents of a ``.req`` file

    Returns:
        tuple: (RequirementSet of the well-formed lines, list of errors)
    """
    requirements = []
    errors: List[PspError] = []
    first_seen = {}
    for number, line in _requirement_lines(text):
        try:
            requirement = parse_requirement(line, number)
        except ParseError as exc:
            logger.warning(f"Line {number}: {exc.message}")
            errors.append(exc)
            continue
        if requirement.id in first_seen:
            errors.append(DuplicateId(requirement.id, number, first_seen[requirement.id]))
            continue
        first_seen[requirement.id] = number
        requirements.append(requirement)
    return RequirementSet(requirements), errors


def format_payload(formula: Formula) -> str:
    """Print a payload expression in the requirement syntax"""
    if isinstance(formula, BoolProp):
        return formula.name
    if isinstance(formula, NumConstraint):
        return f"{formula.var} {formula.rel} {formula.const}"
    if isinstance(formula, Not):
        return f"not {format_payload(formula.operand)}"
    if isinstance(formula, And):
        return f"({format_payload(formula.left)} and {format_payload(formula.right)})"
    if isinstance(formula, Or):
        return f"({format_payload(formula.left)} or {format_payload(formula.right)})"
    raise ValueError(f"Not a payload expression: {formula}")


def format_psp(psp: PspInstance) -> str:
    """
    Print a pattern instance as a structured-English sentence

    Args:
        psp: Pattern instance

    Returns:
        str: Sentence that parses back into an identical instance
    """
    slots = {slot: format_payload(value) for slot, value in psp.slots.items()}

    if psp.scope is Scope.GLOBALLY:
        scope = "Globally"
    elif psp.scope is Scope.BEFORE:
        scope = f"Before {slots['r']}"
    elif psp.scope is Scope.AFTER:
        scope = f"After {slots['q']}"
    elif psp.scope is Scope.BETWEEN:
        scope = f"Between {slots['q']} and {slots['r']}"
    elif psp.scope is Scope.AFTER_UNTIL:
        scope = f"After {slots['q']} until {slots['r']}"

    p = slots["p"]
    if psp.pattern is Pattern.UNIVERSALITY:
        body = f"it is always the case that {p} holds"
    elif psp.pattern is Pattern.ABSENCE:
        body = f"it is never the case that {p} holds"
    elif psp.pattern is Pattern.EXISTENCE:
        body = f"{p} eventually holds"
    elif psp.pattern is Pattern.BOUNDED_EXISTENCE:
        unit = "time" if psp.bound == 1 else "times"
        body = f"transitions to states in which {p} holds occur at most {psp.bound} {unit}"
    elif psp.pattern is Pattern.RESPONSE:
        body = f"it is always the case that if {p} holds, then {slots['s']} eventually holds"
    elif psp.pattern is Pattern.RESPONSE_CHAIN:
        body = (
            f"it is always the case that if {p} holds, then {slots['s']} eventually holds "
            f"and is succeeded by {slots['t']}"
        )
    elif psp.pattern is Pattern.PRECEDENCE:
        body = f"it is always the case that if {p} holds, then {slots['s']} previously held"
    elif psp.pattern is Pattern.PRECEDENCE_CHAIN:
        body = (
            f"it is always the case that if {p} holds, then {slots['s']} previously held "
            f"and was followed by {slots['t']}"
        )
    return f"{scope}, {body}."


def format_requirement(requirement: Requirement) -> str:
    """Print a requirement as an ``ID: SENTENCE`` line"""
    return f"{requirement.id}: {format_psp(requirement.psp)}"
