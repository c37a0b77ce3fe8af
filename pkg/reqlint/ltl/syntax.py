"""
Neutral LTL Text Syntax

Parser for the textual formula format shared with the emitters::

    !  &  |  ->  X  F  G  U  R   parentheses   p   x < 3   x = 0.5

Precedence (tightest first): unary, U/R/W, &, |, ->. U/R/W and -> associate
to the right, & and | to the left. ``V`` is accepted as a synonym for R and
``TRUE``/``FALSE`` for ``true``/``false`` so that SMV LTLSPEC bodies can be
read back.
"""

import re
from typing import Tuple

import pyparsing as pp

from reqlint.ltl.formula import (
    FALSE,
    TRUE,
    And,
    BoolProp,
    Eventually,
    Formula,
    Globally,
    Implies,
    LtlError,
    Next,
    Not,
    NumConstraint,
    Or,
    Release,
    TEMPORAL_KEYWORDS,
    Until,
    WeakUntil,
)

pp.ParserElement.enable_packrat()


class FormulaSyntaxError(LtlError):
    """Neutral formula text could not be parsed"""

    def __init__(self, message: str, line: int, column: int, expected: Tuple[str, ...]):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
        self.expected = expected


_UNARY = {"!": Not, "X": Next, "F": Eventually, "G": Globally}
_BINARY = {
    "U": Until,
    "R": Release,
    "V": Release,
    "W": WeakUntil,
    "&": And,
    "|": Or,
    "->": Implies,
}


def _unary_action(tokens):
    return _UNARY[tokens[0]](tokens[1])


def _left_action(tokens):
    items = list(tokens)
    result = items[0]
    for i in range(1, len(items), 2):
        result = _BINARY[items[i]](result, items[i + 1])
    return result


def _right_action(tokens):
    items = list(tokens)
    result = items[-1]
    for i in range(len(items) - 2, 0, -2):
        result = _BINARY[items[i]](items[i - 1], result)
    return result


def _build_grammar() -> pp.ParserElement:
    keywords = pp.MatchFirst(
        [pp.Keyword(word) for word in TEMPORAL_KEYWORDS + ("true", "false", "TRUE", "FALSE")]
    )
    identifier = (~keywords + pp.Regex(r"[A-Za-z_][A-Za-z0-9_]*")).set_name("identifier")
    constant = pp.Regex(r"-?\d+(?:\.\d+)?").set_name("constant")

    constraint = identifier + pp.one_of("< =") + constant
    constraint.set_parse_action(lambda t: NumConstraint(t[0], t[1], t[2]))
    true_const = (pp.Keyword("true") | pp.Keyword("TRUE")).set_parse_action(lambda: TRUE)
    false_const = (pp.Keyword("false") | pp.Keyword("FALSE")).set_parse_action(lambda: FALSE)
    proposition = identifier.copy().set_parse_action(lambda t: BoolProp(t[0]))

    unary_op = pp.Literal("!") | pp.Keyword("X") | pp.Keyword("F") | pp.Keyword("G")
    temporal_op = pp.Keyword("U") | pp.Keyword("R") | pp.Keyword("V") | pp.Keyword("W")

    # One level per precedence tier; chains are folded by the parse actions
    formula = pp.Forward().set_name("formula")
    group = pp.Suppress("(") + formula + pp.Suppress(")")
    unary = pp.Forward().set_name("operand")
    unary <<= (
        (unary_op + unary).set_parse_action(_unary_action)
        | true_const
        | false_const
        | constraint
        | proposition
        | group
    )
    temporal = (unary + pp.ZeroOrMore(temporal_op + unary)).set_parse_action(_right_action)
    conjunct = (temporal + pp.ZeroOrMore(pp.Literal("&") + temporal)).set_parse_action(_left_action)
    disjunct = (conjunct + pp.ZeroOrMore(pp.Literal("|") + conjunct)).set_parse_action(_left_action)
    formula <<= (disjunct + pp.ZeroOrMore(pp.Literal("->") + disjunct)).set_parse_action(_right_action)
    return formula


_FORMULA = _build_grammar()


def parse_formula(text: str) -> Formula:
    """
    Parse a formula written in the neutral syntax

    Args:
        text: Formula text

    Returns:
        Formula: Parsed formula

    Raises:
        FormulaSyntaxError: With line, column and expected tokens
    """
    try:
        return _FORMULA.parse_string(text, parse_all=True)[0]
    except pp.ParseException as exc:
        raise FormulaSyntaxError(exc.msg, exc.lineno, exc.col, expected_tokens(exc.msg)) from None
    except RecursionError:
        pp.ParserElement.reset_cache()
        raise FormulaSyntaxError("nesting too deep", 1, 1, ()) from None


def expected_tokens(message: str) -> Tuple[str, ...]:
    """Extract the expected-token alternatives from a pyparsing error message"""
    text = message.strip()
    if text.startswith("Expected "):
        text = text[len("Expected "):]
    if text.startswith("{") and text.endswith("}"):
        text = text[1:-1]
    parts = [part.strip() for part in re.split(r"\s+\|\s+|,\s+found.*$", text) if part.strip()]
    return tuple(sorted(set(parts)))
