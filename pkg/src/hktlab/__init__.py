"""Verification toolkit for quaternionic Dolbeault calculus and HKT constructions."""

from .report import CheckRecord, VerificationReport
from .suites import SUITES, ScenarioConfig, Tolerances, run_suite

__version__ = "0.1.0"

__all__ = ["CheckRecord", "VerificationReport", "SUITES", "ScenarioConfig",
           "Tolerances", "run_suite", "__version__"]
