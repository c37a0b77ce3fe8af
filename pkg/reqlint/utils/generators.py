"""
Random Instance Generators

Provides seeded generators for:
- Random LTL formulas over boolean and numerical atoms
- Random lasso traces and exhaustive lasso enumeration
- Random pattern requirements and requirement corpora

All generators take a ``numpy.random.Generator`` so runs are reproducible.
"""

import itertools
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence

import numpy as np

from reqlint.ltl.formula import (
    And,
    BoolProp,
    Eventually,
    Formula,
    Globally,
    Implies,
    Next,
    Not,
    NumConstraint,
    Or,
    Release,
    Until,
    WeakUntil,
    format_fraction,
)
from reqlint.ltl.lasso import LassoTrace
from reqlint.psp.grammar import format_psp
from reqlint.psp.requirement import Pattern, PspInstance, Requirement, Scope

UNARY_OPERATORS = (Not, Next, Eventually, Globally)
BINARY_OPERATORS = (And, Or, Implies, Until, Release, WeakUntil)


def boolean_atoms(names: Sequence[str]) -> List[Formula]:
    return [BoolProp(name) for name in names]


def constraint_atoms(constants: dict) -> List[Formula]:
    """All ``x < c`` and ``x = c`` atoms for a {variable: constants} mapping"""
    atoms = []
    for var, values in constants.items():
        for value in values:
            text = format_fraction(Fraction(value))
            atoms.append(NumConstraint(var, "<", text))
            atoms.append(NumConstraint(var, "=", text))
    return atoms


def random_formula(
    rng: np.random.Generator,
    atoms: Sequence[Formula],
    size: int,
    unary: Sequence[type] = UNARY_OPERATORS,
    binary: Sequence[type] = BINARY_OPERATORS,
) -> Formula:
    """
    Random formula with exactly ``size`` nodes

    Args:
        rng: Random generator
        atoms: Leaf formulas to draw from
        size: Number of nodes (>= 1)
        unary: Unary node classes
        binary: Binary node classes

    Returns:
        Formula: Random formula
    """
    if size <= 1:
        return atoms[int(rng.integers(len(atoms)))]
    if size == 2 or rng.random() < 0.3:
        op = unary[int(rng.integers(len(unary)))]
        return op(random_formula(rng, atoms, size - 1, unary, binary))
    op = binary[int(rng.integers(len(binary)))]
    left_size = int(rng.integers(1, size - 1))
    return op(
        random_formula(rng, atoms, left_size, unary, binary),
        random_formula(rng, atoms, size - 1 - left_size, unary, binary),
    )


def random_dc_formula(
    rng: np.random.Generator,
    max_variables: int = 2,
    max_constants: int = 2,
    size: int = 8,
    propositions: Sequence[str] = ("p",),
) -> Formula:
    """Random formula mixing propositions and small-integer numerical constraints"""
    n_vars = int(rng.integers(1, max_variables + 1))
    constants = {
        f"x{i}": sorted(set(int(c) for c in rng.integers(-3, 4, size=int(rng.integers(1, max_constants + 1)))))
        for i in range(n_vars)
    }
    atoms = constraint_atoms(constants) + boolean_atoms(propositions)
    return random_formula(rng, atoms, size)


def random_lasso(rng: np.random.Generator, names: Sequence[str], max_length: int = 5) -> LassoTrace:
    """Random lasso with 1 <= |prefix| + |loop| <= max_length"""
    total = int(rng.integers(1, max_length + 1))
    loop_length = int(rng.integers(1, total + 1))
    values = rng.random((total, len(names))) < 0.5
    states = [{name: bool(values[i, j]) for j, name in enumerate(names)} for i in range(total)]
    return LassoTrace(tuple(states[: total - loop_length]), tuple(states[total - loop_length:]))


def enumerate_lassos(names: Sequence[str], max_length: int) -> Iterator[LassoTrace]:
    """
    Every lasso over all assignments to ``names`` with |prefix| + |loop| <= max_length

    Args:
        names: Proposition names
        max_length: Bound on the total number of states

    Yields:
        LassoTrace: Lassos, shortest first
    """
    letters = [
        dict(zip(names, bits)) for bits in itertools.product((False, True), repeat=len(names))
    ]
    for total in range(1, max_length + 1):
        for word in itertools.product(letters, repeat=total):
            for loop_start in range(total):
                yield LassoTrace(word[:loop_start], word[loop_start:])


def random_psp(rng: np.random.Generator, atoms: Sequence[Formula],
               bound: Optional[int] = None) -> PspInstance:
    """Random pattern instance whose slots are drawn from ``atoms``"""

    def pick() -> Formula:
        atom = atoms[int(rng.integers(len(atoms)))]
        return Not(atom) if rng.random() < 0.2 else atom

    scope = list(Scope)[int(rng.integers(len(Scope)))]
    pattern = list(Pattern)[int(rng.integers(len(Pattern)))]
    slots = {"p": pick()}
    if pattern in (Pattern.RESPONSE, Pattern.PRECEDENCE, Pattern.RESPONSE_CHAIN, Pattern.PRECEDENCE_CHAIN):
        slots["s"] = pick()
    if pattern in (Pattern.RESPONSE_CHAIN, Pattern.PRECEDENCE_CHAIN):
        slots["t"] = pick()
    if scope in (Scope.AFTER, Scope.BETWEEN, Scope.AFTER_UNTIL):
        slots["q"] = pick()
    if scope in (Scope.BEFORE, Scope.BETWEEN, Scope.AFTER_UNTIL):
        slots["r"] = pick()
    if pattern is Pattern.BOUNDED_EXISTENCE:
        slots["bound"] = bound if bound is not None else int(rng.integers(1, 3))
    return PspInstance(scope=scope, pattern=pattern, **slots)


def random_requirements(rng: np.random.Generator, count: int, atoms: Sequence[Formula],
                        prefix: str = "R") -> List[Requirement]:
    """``count`` random requirements with ids R1, R2, ..."""
    requirements = []
    for i in range(1, count + 1):
        psp = random_psp(rng, atoms)
        text = f"{prefix}{i}: {format_psp(psp)}"
        requirements.append(Requirement(id=f"{prefix}{i}", source_text=text, psp=psp, line=i))
    return requirements


def generate_corpus(rng: np.random.Generator, count: int = 100, n_variables: int = 30,
                    numeric_fraction: float = 0.2) -> str:
    """
    Text of a random ``.req`` file

    Args:
        rng: Random generator
        count: Number of requirements
        n_variables: Number of distinct signals
        numeric_fraction: Share of signals used as numerical variables

    Returns:
        str: Requirements file contents
    """
    n_numeric = int(round(n_variables * numeric_fraction))
    atoms: List[Formula] = boolean_atoms(f"s{i}" for i in range(n_variables - n_numeric))
    for i in range(n_numeric):
        constant = str(int(rng.integers(0, 100)))
        atoms.append(NumConstraint(f"v{i}", "<", constant))
        atoms.append(NumConstraint(f"v{i}", "=", constant))

    lines = [f"# random corpus: {count} requirements over {n_variables} signals"]
    lines.extend(requirement.source_text for requirement in random_requirements(rng, count, atoms))
    return "\n".join(lines) + "\n"
