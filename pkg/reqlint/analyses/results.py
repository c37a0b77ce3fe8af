"""
Analysis Results

Verdicts and result records produced by the requirement-set analyses.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, FrozenSet, List, Optional, Tuple

from reqlint.engine.checker import EngineStats
from reqlint.ltl.formula import Formula, format_formula
from reqlint.ltl.lasso import LassoTrace


class Verdict(str, Enum):
    CONSISTENT = "CONSISTENT"
    INCONSISTENT = "INCONSISTENT"
    INDETERMINATE = "INDETERMINATE"
    PARSE_ERROR = "PARSE_ERROR"

    @property
    def exit_code(self) -> int:
        return _EXIT_CODES[self]


_EXIT_CODES = {
    Verdict.CONSISTENT: 0,
    Verdict.INCONSISTENT: 1,
    Verdict.PARSE_ERROR: 2,
    Verdict.INDETERMINATE: 3,
}


def witness_to_dict(witness: Optional[LassoTrace], hide_regions: bool = True) -> Optional[Dict[str, Any]]:
    """JSON form of a witness; region propositions are dropped unless asked for"""
    if witness is None:
        return None
    data = witness.to_dict()
    if hide_regions:
        for part in ("prefix", "loop"):
            data[part] = [
                {name: value for name, value in state.items() if not name.startswith("__")}
                for state in data[part]
            ]
    return data


@dataclass
class ConsistencyResult:
    """Outcome of the consistency check"""

    verdict: Verdict
    witness: Optional[LassoTrace] = None
    stats: Optional[EngineStats] = None
    message: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "verdict": self.verdict.value,
            "witness": witness_to_dict(self.witness),
            "stats": self.stats.to_dict() if self.stats else None,
            "message": self.message,
        }


@dataclass
class MusResult:
    """Minimal inconsistent subset found by the deletion algorithm

    Attributes:
        ids: Requirement ids of the subset (or of the current working set if incomplete)
        complete: False if a resource cap interrupted the deletion loop
        checks: Number of satisfiability checks performed
        pending: Ids not yet examined when the loop was interrupted
    """

    ids: Tuple[str, ...]
    complete: bool = True
    checks: int = 0
    pending: Tuple[str, ...] = ()

    @property
    def status(self) -> str:
        return "minimal" if self.complete else Verdict.INDETERMINATE.value

    def to_dict(self) -> Dict[str, Any]:
        return {
            "ids": list(self.ids),
            "status": self.status,
            "checks": self.checks,
            "pending": list(self.pending),
        }


@dataclass
class VacuityFinding:
    """Trigger reachability of one requirement

    ``vacuous`` is None when the check hit a resource cap.
    """

    requirement_id: str
    trigger: Formula
    vacuous: Optional[bool]
    witness: Optional[LassoTrace] = None
    error: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "id": self.requirement_id,
            "trigger": format_formula(self.trigger),
            "vacuous": self.vacuous,
            "witness": witness_to_dict(self.witness),
            "error": self.error,
        }


@dataclass(frozen=True)
class DependencyGraph:
    """Requirements connected when their variable sets intersect"""

    vertices: Tuple[str, ...]
    edges: FrozenSet[FrozenSet[str]]

    def neighbors(self, vertex: str) -> List[str]:
        """Adjacent vertices in vertex order"""
        return [other for other in self.vertices if frozenset((vertex, other)) in self.edges]

    def has_edge(self, a: str, b: str) -> bool:
        return frozenset((a, b)) in self.edges


@dataclass
class ConnectivityResult:
    """Connected components of the dependency graph, smallest first"""

    components: List[Tuple[str, ...]] = field(default_factory=list)
    flagged: List[Tuple[str, ...]] = field(default_factory=list)

    @property
    def connected(self) -> bool:
        return len(self.components) <= 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            "components": [list(c) for c in self.components],
            "flagged": [list(c) for c in self.flagged],
        }
