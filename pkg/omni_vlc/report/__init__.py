"""Run-summary reports."""

from omni_vlc.report.engine import ReportEngine

__all__ = ["ReportEngine"]
