"""
Report Writer

Handles writing analysis reports as JSON files and terminal text.
"""

import json
import logging
import os
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

from reqlint.analyses.results import Verdict
from reqlint.ltl.lasso import LassoTrace
from reqlint.report.report import AnalysisReport

SCHEMA_PATH = Path(__file__).with_name("report.schema.json")

_COLORS = {
    Verdict.CONSISTENT: "\033[32m",
    Verdict.INCONSISTENT: "\033[31m",
    Verdict.PARSE_ERROR: "\033[31m",
    Verdict.INDETERMINATE: "\033[33m",
}
_WARNING = "\033[33m"
_RESET = "\033[0m"


def color_enabled(setting: Optional[bool] = None, stream=None) -> bool:
    """
    Decide whether to emit ANSI colours

    Args:
        setting: Explicit choice; None defers to REQLINT_COLOR, then to the tty check
        stream: Output stream (defaults to stdout)

    Returns:
        bool: True if colours should be used
    """
    if setting is not None:
        return bool(setting)
    env = os.environ.get("REQLINT_COLOR")
    if env in ("0", "1"):
        return env == "1"
    stream = stream or sys.stdout
    return hasattr(stream, "isatty") and stream.isatty()


def load_schema() -> Dict[str, Any]:
    """The JSON schema every report follows"""
    with open(SCHEMA_PATH, "r", encoding="utf-8") as f:
        return json.load(f)


class ReportWriter:
    """Writer for JSON and text reports"""

    def __init__(self, indent: int = 2, color: Optional[bool] = None):
        """
        Initialize report writer

        Args:
            indent: JSON indentation
            color: Use ANSI colours in text output (None: decide from the environment)
        """
        self.indent = indent
        self.color = color_enabled(color)
        self.logger = logging.getLogger("reqlint.report.ReportWriter")

    def save_json(self, filepath: str, report: AnalysisReport) -> bool:
        """
        Save report as JSON

        Args:
            filepath: Output path
            report: Report to save

        Returns:
            bool: True if save successful
        """
        try:
            filepath = Path(filepath)
            filepath.parent.mkdir(parents=True, exist_ok=True)
            with open(filepath, "w", encoding="utf-8") as f:
                json.dump(report.to_dict(), f, indent=self.indent, ensure_ascii=False)
                f.write("\n")
            self.logger.info(f"Report saved to {filepath}")
            return True
        except Exception as e:
            self.logger.error(f"Failed to save report: {e}")
            return False

    def load_json(self, filepath: str) -> Optional[Dict[str, Any]]:
        """
        Load a JSON report

        Args:
            filepath: Path to report file

        Returns:
            dict: Report data or None if load failed
        """
        try:
            filepath = Path(filepath)
            if not filepath.exists():
                self.logger.error(f"File not found: {filepath}")
                return None
            with open(filepath, "r", encoding="utf-8") as f:
                return json.load(f)
        except Exception as e:
            self.logger.error(f"Failed to load report: {e}")
            return None

    def render_text(self, report: AnalysisReport) -> str:
        """
        Render a report for the terminal

        Args:
            report: Report to render

        Returns:
            str: Human-readable report
        """
        lines = [f"reqlint {report.version} {report.command} {report.input_path}".rstrip()]

        errors = report.parse_errors
        parsed = len(report.requirements) - len(errors)
        lines.append(f"  {parsed} requirements parsed, {len(errors)} errors")
        for status in errors:
            where = f"line {status.line}" + (f", column {status.column}" if status.column else "")
            lines.append(f"  {where}: {status.message}")
            if status.expected:
                lines.append(f"    expected: {', '.join(status.expected)}")

        if report.verdict is not None:
            lines.append(f"Verdict: {self._paint(report.verdict.value, _COLORS[report.verdict])}")
        consistency = report.consistency
        if consistency is not None and consistency.witness is not None and report.verdict is Verdict.CONSISTENT:
            lines.append("Witness:")
            lines.extend(self._render_trace(consistency.witness))
        if consistency is not None and consistency.stats is not None:
            stats = consistency.stats
            lines.append(
                f"Engine: {stats.states} states, {stats.edges} edges, {stats.sccs} SCCs, {stats.elapsed:.3f}s"
            )

        if report.mus is not None:
            label = "Minimal inconsistent subset" if report.mus.complete else "Inconsistent subset (incomplete)"
            lines.append(f"{label}: {', '.join(report.mus.ids)}")

        if report.vacuity:
            lines.append("Vacuity:")
            for finding in report.vacuity:
                if finding.vacuous is None:
                    state = self._paint("indeterminate", _WARNING)
                elif finding.vacuous:
                    state = self._paint("vacuous", _COLORS[Verdict.INCONSISTENT])
                else:
                    state = "not vacuous"
                lines.append(f"  {finding.requirement_id}: {state} (trigger {finding.trigger})")

        if report.connectivity is not None:
            components = report.connectivity.components
            lines.append(f"Connectivity: {len(components)} component{'s' if len(components) != 1 else ''}")
            for component in components:
                flag = self._paint(" <- disconnected", _WARNING) if component in report.connectivity.flagged else ""
                lines.append(f"  [{', '.join(component)}]{flag}")

        for warning in report.warnings:
            lines.append(self._paint(f"warning: {warning}", _WARNING))

        return "\n".join(lines) + "\n"

    def _render_trace(self, trace: LassoTrace) -> List[str]:
        data = trace.to_dict()
        lines = []
        position = 0
        for part in ("prefix", "loop"):
            if not data[part]:
                continue
            lines.append(f"  {part}:")
            for state in data[part]:
                values = ", ".join(
                    f"{name}={str(value).lower() if isinstance(value, bool) else value}"
                    for name, value in state.items()
                    if not name.startswith("__")
                )
                lines.append(f"    {position}: {values or '-'}")
                position += 1
        return lines

    def _paint(self, text: str, code: str) -> str:
        return f"{code}{text}{_RESET}" if self.color else text
