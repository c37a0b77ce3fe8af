"""
Analysis Report Container

Everything one CLI run found out about a requirements file.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from reqlint import __version__
from reqlint.analyses.results import (
    ConnectivityResult,
    ConsistencyResult,
    MusResult,
    VacuityFinding,
    Verdict,
)
from reqlint.psp.requirement import DuplicateId, ParseError, PspError, Requirement

SCHEMA_VERSION = 1


@dataclass
class RequirementStatus:
    """Parse status of one requirement line"""

    line: int
    id: Optional[str] = None
    ok: bool = True
    message: str = ""
    column: Optional[int] = None
    expected: Tuple[str, ...] = ()

    @classmethod
    def parsed(cls, requirement: Requirement) -> "RequirementStatus":
        return cls(line=requirement.line, id=requirement.id)

    @classmethod
    def failed(cls, error: PspError) -> "RequirementStatus":
        if isinstance(error, ParseError):
            req_id = error.text.split(":", 1)[0].strip() if ":" in error.text else None
            return cls(
                line=error.line,
                id=req_id or None,
                ok=False,
                message=error.message,
                column=error.column,
                expected=tuple(error.expected),
            )
        if isinstance(error, DuplicateId):
            return cls(line=error.line, id=error.requirement_id, ok=False, message=str(error))
        return cls(line=0, ok=False, message=str(error))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "line": self.line,
            "id": self.id,
            "status": "ok" if self.ok else "error",
            "message": self.message,
            "column": self.column,
            "expected": list(self.expected),
        }


@dataclass
class AnalysisReport:
    """Result of one reqlint run"""

    command: str
    input_path: str = ""
    digest: str = ""
    requirements: List[RequirementStatus] = field(default_factory=list)
    verdict: Optional[Verdict] = None
    consistency: Optional[ConsistencyResult] = None
    mus: Optional[MusResult] = None
    vacuity: List[VacuityFinding] = field(default_factory=list)
    connectivity: Optional[ConnectivityResult] = None
    warnings: List[str] = field(default_factory=list)
    wall_time: float = 0.0
    version: str = __version__

    @property
    def parse_errors(self) -> List[RequirementStatus]:
        return [status for status in self.requirements if not status.ok]

    @property
    def exit_code(self) -> int:
        if self.verdict is not None:
            return self.verdict.exit_code
        return Verdict.PARSE_ERROR.exit_code if self.parse_errors else 0

    def to_dict(self) -> Dict[str, Any]:
        """
        Get report as a JSON-compatible dictionary

        Returns:
            dict: Report following report.schema.json
        """
        consistency = self.consistency
        return {
            "schema_version": SCHEMA_VERSION,
            "tool": {"name": "reqlint", "version": self.version},
            "command": self.command,
            "input": {"path": self.input_path, "sha256": self.digest},
            "requirements": [status.to_dict() for status in self.requirements],
            "verdict": self.verdict.value if self.verdict is not None else None,
            "witness": consistency.to_dict()["witness"] if consistency else None,
            "stats": consistency.stats.to_dict() if consistency and consistency.stats else None,
            "mus": self.mus.to_dict() if self.mus else None,
            "vacuity": [finding.to_dict() for finding in self.vacuity],
            "connectivity": self.connectivity.to_dict() if self.connectivity else None,
            "warnings": list(self.warnings),
            "wall_time": self.wall_time,
        }

    def __repr__(self) -> str:
        verdict = self.verdict.value if self.verdict else None
        return f"<AnalysisReport({self.command}, {len(self.requirements)} requirements, verdict={verdict})>"
