"""
Requirement Analyzer

Coordinates parsing, translation and the analyses for one requirements file
and collects the results into an AnalysisReport.
"""

import hashlib
import logging
import time
from typing import List, Optional, Tuple

from reqlint.abstraction import AbstractionError, build_abstraction
from reqlint.analyses import (
    ConsistencyResult,
    Verdict,
    check_connectivity,
    check_consistency,
    check_vacuity,
    explain_inconsistency,
    make_checker,
)
from reqlint.config import Config
from reqlint.emitters import EmitError, EmitTarget, emit
from reqlint.engine.checker import DEFAULT_MAX_STATES, DEFAULT_TIMEOUT
from reqlint.psp import PspError, RequirementSet, conjoin, parse_requirement_lines
from reqlint.report import AnalysisReport, RequirementStatus

COMMANDS = ("check", "explain", "vacuity", "graph")


class RequirementAnalyzer:
    """Runs the requirement-set analyses with shared engine caps"""

    def __init__(
        self,
        max_states: int = DEFAULT_MAX_STATES,
        timeout: Optional[float] = DEFAULT_TIMEOUT,
        connectivity: bool = True,
        verify_mus: bool = False,
        show_progress: bool = False,
    ):
        """
        Initialize analyzer

        Args:
            max_states: Tableau state cap per satisfiability check
            timeout: Time cap per satisfiability check in seconds
            connectivity: Run the connectivity check with check/explain
            verify_mus: Re-check the minimality of explanations
            show_progress: Show progress bars for the per-requirement loops
        """
        self.max_states = max_states
        self.timeout = timeout
        self.connectivity = connectivity
        self.verify_mus = verify_mus
        self.show_progress = show_progress
        self.logger = logging.getLogger("reqlint.RequirementAnalyzer")

    @classmethod
    def from_config(cls, config: Config) -> "RequirementAnalyzer":
        return cls(
            max_states=config.get("engine.max_states", DEFAULT_MAX_STATES),
            timeout=config.get("engine.timeout", DEFAULT_TIMEOUT),
            connectivity=config.get("analyses.connectivity", True),
            verify_mus=config.get("analyses.verify_mus", False),
            show_progress=config.get("analyses.show_progress", False),
        )

    def parse(self, text: str) -> Tuple[RequirementSet, List[RequirementStatus]]:
        """
        Parse a requirements file leniently

        Returns:
            tuple: (well-formed requirements, parse status of every line in line order)
        """
        requirements, errors = parse_requirement_lines(text)
        statuses = [RequirementStatus.parsed(r) for r in requirements]
        statuses.extend(RequirementStatus.failed(error) for error in errors)
        statuses.sort(key=lambda status: status.line)
        self.logger.info(f"Parsed {len(requirements)} requirements, {len(errors)} errors")
        return requirements, statuses

    def analyze(self, text: str, command: str = "check", input_path: str = "") -> AnalysisReport:
        """
        Run one command on the contents of a requirements file

        Args:
            text: Requirements file contents
            command: One of check, explain, vacuity, graph
            input_path: Path shown in the report

        Returns:
            AnalysisReport: Collected results; ``exit_code`` matches the verdict
        """
        if command not in COMMANDS:
            raise ValueError(f"Unknown command: {command}")

        started = time.monotonic()
        report = self._new_report(text, command, input_path)
        requirements, report.requirements = self.parse(text)

        if report.parse_errors:
            if command != "graph":
                report.verdict = Verdict.PARSE_ERROR
        elif command == "graph":
            report.connectivity = check_connectivity(requirements)
        else:
            self._run_analyses(report, requirements, command)

        if report.connectivity is not None:
            for component in report.connectivity.flagged:
                report.warnings.append(f"disconnected requirements: {', '.join(component)}")
        report.wall_time = time.monotonic() - started
        return report

    def _run_analyses(self, report: AnalysisReport, requirements: RequirementSet, command: str):
        if len(requirements) == 0:
            report.warnings.append("empty set")

        try:
            checker = make_checker(requirements, self.max_states, self.timeout)
            report.consistency = check_consistency(requirements, checker)
        except (PspError, AbstractionError) as exc:
            self.logger.error(f"Cannot analyze requirements: {exc}")
            report.consistency = ConsistencyResult(Verdict.PARSE_ERROR, message=str(exc))
            report.verdict = Verdict.PARSE_ERROR
            report.warnings.append(str(exc))
            return

        report.verdict = report.consistency.verdict
        if report.verdict is Verdict.INDETERMINATE:
            report.warnings.append(f"resource limit reached: {report.consistency.message}")

        if command in ("check", "explain") and self.connectivity:
            report.connectivity = check_connectivity(requirements)

        if command == "explain" and report.verdict is Verdict.INCONSISTENT:
            report.mus = explain_inconsistency(
                requirements, checker, verify=self.verify_mus, show_progress=self.show_progress
            )
            if not report.mus.complete:
                report.warnings.append("explanation interrupted by a resource limit")

        if command == "vacuity" and report.verdict is Verdict.CONSISTENT and len(requirements) > 0:
            report.vacuity = check_vacuity(
                requirements, checker, report.consistency.witness, show_progress=self.show_progress
            )
            for finding in report.vacuity:
                if finding.vacuous:
                    report.warnings.append(f"{finding.requirement_id} is satisfied vacuously")

    def emit(self, text: str, target: EmitTarget, input_path: str = "") -> Tuple[Optional[str], AnalysisReport]:
        """
        Abstract a requirements file and write it for an external model checker

        Args:
            text: Requirements file contents
            target: Output format
            input_path: Path shown in the report

        Returns:
            tuple: (emitted text, or None if the file cannot be abstracted; report)
        """
        started = time.monotonic()
        report = self._new_report(text, "emit", input_path)
        requirements, report.requirements = self.parse(text)

        output = None
        if not report.parse_errors:
            try:
                output = emit(build_abstraction(conjoin(requirements)), target)
            except (PspError, AbstractionError, EmitError) as exc:
                self.logger.error(f"Cannot emit requirements: {exc}")
                report.verdict = Verdict.PARSE_ERROR
                report.warnings.append(str(exc))

        report.wall_time = time.monotonic() - started
        return output, report

    @staticmethod
    def _new_report(text: str, command: str, input_path: str) -> AnalysisReport:
        return AnalysisReport(
            command=command,
            input_path=input_path,
            digest=hashlib.sha256(text.encode("utf-8")).hexdigest(),
        )

    def __repr__(self) -> str:
        return f"<RequirementAnalyzer(max_states={self.max_states}, timeout={self.timeout})>"
