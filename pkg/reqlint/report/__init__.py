"""
Report Module

Analysis report container, JSON/text writer and the report schema.
"""

from reqlint.report.report import AnalysisReport, RequirementStatus
from reqlint.report.writer import ReportWriter, color_enabled, load_schema

__all__ = ["AnalysisReport", "RequirementStatus", "ReportWriter", "color_enabled", "load_schema"]
