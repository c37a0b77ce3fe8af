"""
Model Checker Emitters

Serializes an abstracted satisfiability problem for external tools:

- SMV: the unconstrained model over all propositions with the negated query
  as LTLSPEC. A counterexample to the LTLSPEC is a model of the query.
- Neutral LTL: line 1 is the exactly-one constraint, line 2 the abstracted
  formula, both in the neutral text syntax.
"""

import logging
from enum import Enum
from typing import Tuple

from reqlint.abstraction import AbstractionResult
from reqlint.ltl.formula import NEUTRAL, SMV, Formula, Not, format_formula, propositions
from reqlint.ltl.syntax import parse_formula

logger = logging.getLogger("reqlint.emitters")

# Identifiers the SMV input language reserves
SMV_RESERVED = frozenset(
    """
    MODULE VAR IVAR FROZENVAR DEFINE ASSIGN TRANS INIT INVAR SPEC CTLSPEC LTLSPEC PSLSPEC
    INVARSPEC COMPUTE FAIRNESS JUSTICE COMPASSION CONSTANTS ISA PRED MIRROR
    next init case esac TRUE FALSE mod xor xnor self boolean word array of integer real
    union in process signed unsigned extend resize sizeof toint count
    X F G U V Y Z H O S T A E AX AF AG EX EF EG ABF ABG EBF EBG MIN MAX
    """.split()
)


class EmitError(Exception):
    """A problem cannot be written in the requested format"""


class EmitTarget(str, Enum):
    SMV = "smv"
    NEUTRAL_LTL = "ltl"


def emit_smv(problem: AbstractionResult) -> str:
    """
    Write the problem as an SMV model

    Args:
        problem: Abstraction of the requirement conjunction

    Returns:
        str: SMV text with LF line endings

    Raises:
        EmitError: If a proposition name is reserved in SMV
    """
    query = problem.query
    names = propositions(query)
    reserved = [name for name in names if name in SMV_RESERVED]
    if reserved:
        raise EmitError(f"Propositions reserved in SMV: {', '.join(reserved)}")

    lines = ["MODULE main", "VAR"]
    lines.extend(f"  {name} : boolean;" for name in names)
    lines.append(f"LTLSPEC {format_formula(Not(query), SMV)}")
    logger.debug(f"SMV model with {len(names)} variables")
    return "\n".join(lines) + "\n"


def emit_neutral(problem: AbstractionResult) -> str:
    """
    Write the problem in the neutral LTL syntax

    Args:
        problem: Abstraction of the requirement conjunction

    Returns:
        str: Two lines, the exactly-one constraint then the abstracted formula
    """
    return f"{format_formula(problem.q_m, NEUTRAL)}\n{format_formula(problem.phi_prime, NEUTRAL)}\n"


def parse_neutral(text: str) -> Tuple[Formula, Formula]:
    """
    Read a neutral LTL file back

    Args:
        text: File contents; blank lines and ``#`` comments are skipped

    Returns:
        tuple: (q_m, phi_prime)

    Raises:
        ValueError: If the file does not hold exactly two formulas
        FormulaSyntaxError: If a formula does not parse
    """
    lines = [line.strip() for line in text.splitlines()]
    formulas = [parse_formula(line) for line in lines if line and not line.startswith("#")]
    if len(formulas) != 2:
        raise ValueError(f"Expected 2 formulas, found {len(formulas)}")
    return formulas[0], formulas[1]


def emit(problem: AbstractionResult, target: EmitTarget) -> str:
    """Write the problem in the format named by ``target``"""
    target = EmitTarget(target)
    if target is EmitTarget.SMV:
        return emit_smv(problem)
    return emit_neutral(problem)
