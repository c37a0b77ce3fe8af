"""
reqlint

Consistency analysis of requirements written as property specification
patterns over boolean signals and numerical constraints.
"""

__version__ = "0.1.0"

from reqlint.config import Config
from reqlint.analyzer import RequirementAnalyzer

__all__ = ["Config", "RequirementAnalyzer"]
