"""
LTL Core Module

Formula representation, normalization, closure, text syntax, and the reference
lasso semantics.
"""

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
    Until,
    WeakUntil,
    conjunction,
    disjunction,
    format_formula,
    propositions,
    numeric_variables,
    size,
)
from reqlint.ltl.transforms import to_nnf, closure
from reqlint.ltl.lasso import LassoTrace, UncoveredProposition, eval_on_lasso
from reqlint.ltl.syntax import FormulaSyntaxError, parse_formula

__all__ = [
    "FALSE",
    "TRUE",
    "And",
    "BoolProp",
    "Eventually",
    "Formula",
    "Globally",
    "Implies",
    "LtlError",
    "Next",
    "Not",
    "NumConstraint",
    "Or",
    "Release",
    "Until",
    "WeakUntil",
    "conjunction",
    "disjunction",
    "format_formula",
    "propositions",
    "numeric_variables",
    "size",
    "to_nnf",
    "closure",
    "LassoTrace",
    "UncoveredProposition",
    "eval_on_lasso",
    "FormulaSyntaxError",
    "parse_formula",
]
