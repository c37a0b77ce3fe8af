"""
Utility functions for reqlint
"""

from reqlint.utils.generators import (
    boolean_atoms,
    constraint_atoms,
    enumerate_lassos,
    generate_corpus,
    random_dc_formula,
    random_formula,
    random_lasso,
    random_psp,
    random_requirements,
)

__all__ = [
    "boolean_atoms",
    "constraint_atoms",
    "enumerate_lassos",
    "generate_corpus",
    "random_dc_formula",
    "random_formula",
    "random_lasso",
    "random_psp",
    "random_requirements",
]
