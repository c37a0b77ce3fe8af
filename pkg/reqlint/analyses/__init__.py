"""
Requirement-Set Analyses

Consistency, minimal inconsistent subsets, vacuity and connectivity.
"""

from reqlint.analyses.results import (
    ConnectivityResult,
    ConsistencyResult,
    DependencyGraph,
    MusResult,
    VacuityFinding,
    Verdict,
)
from reqlint.analyses.consistency import check_consistency, make_checker
from reqlint.analyses.explanation import explain_inconsistency, verify_mus
from reqlint.analyses.vacuity import check_vacuity
from reqlint.analyses.connectivity import build_dependency_graph, check_connectivity

__all__ = [
    "ConnectivityResult",
    "ConsistencyResult",
    "DependencyGraph",
    "MusResult",
    "VacuityFinding",
    "Verdict",
    "check_consistency",
    "make_checker",
    "explain_inconsistency",
    "verify_mus",
    "check_vacuity",
    "build_dependency_graph",
    "check_connectivity",
]
