"""Verification harness: configurable suites of numerical checks and their reports."""
from .config import SUITES, SuiteConfig, config_from_dict, load_config
from .report import Check, SuiteResult, VerificationReport, emit_report
from .suites import run_suite, run_suites

__all__ = ["SUITES", "SuiteConfig", "config_from_dict", "load_config", "Check",
           "SuiteResult", "VerificationReport", "emit_report", "run_suite", "run_suites"]
