"""Verification suite, report rendering and CLI."""

from .report import render_report, render_reports, report_to_dict
from .suite import FAIL, PASS, SKIPPED, Check, Config, Report, run_suite

__all__ = ["Config", "Report", "Check", "run_suite", "render_report", "render_reports", "report_to_dict",
           "PASS", "FAIL", "SKIPPED"]
