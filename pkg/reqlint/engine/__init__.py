"""
Satisfiability Engine

Tableau-based LTL satisfiability with lasso witnesses.
"""

from reqlint.engine.tableau import TableauGraph, TableauState, expand
from reqlint.engine.checker import (
    EngineError,
    EngineStats,
    ResourceLimit,
    SatChecker,
    SatVerdict,
    WitnessError,
    check_sat,
)
from reqlint.engine.incremental import IncrementalChecker, check_sat_incremental

__all__ = [
    "TableauGraph",
    "TableauState",
    "expand",
    "EngineError",
    "EngineStats",
    "ResourceLimit",
    "SatChecker",
    "SatVerdict",
    "WitnessError",
    "check_sat",
    "IncrementalChecker",
    "check_sat_incremental",
]
