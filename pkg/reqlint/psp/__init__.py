"""
PSP Front End

Structured-English requirements: data types, the phrase grammar, and the
pattern-to-LTL catalog.
"""

from reqlint.psp.requirement import (
    DuplicateId,
    ParseError,
    Pattern,
    PspError,
    PspInstance,
    Requirement,
    RequirementSet,
    Scope,
    UnsupportedCombination,
)
from reqlint.psp.grammar import (
    format_psp,
    format_requirement,
    parse_requirement,
    parse_requirement_lines,
    parse_requirements,
)
from reqlint.psp.catalog import conjoin, psp_to_ltl, translate_all

__all__ = [
    "DuplicateId",
    "ParseError",
    "Pattern",
    "PspError",
    "PspInstance",
    "Requirement",
    "RequirementSet",
    "Scope",
    "UnsupportedCombination",
    "format_psp",
    "format_requirement",
    "parse_requirement",
    "parse_requirement_lines",
    "parse_requirements",
    "conjoin",
    "psp_to_ltl",
    "translate_all",
]
