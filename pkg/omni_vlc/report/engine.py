"""Markdown run-summary generator for omni-vlc."""

from pathlib import Path

import yaml
from jinja2 import Environment, FileSystemLoader, select_autoescape

from omni_vlc.experiments.results import ExperimentResult, format_cell


def get_templates_dir() -> Path:
    """Get path to report templates directory."""
    return Path(__file__).parent / "templates"


class ReportEngine:
    """Jinja2-based experiment summary generator."""

    def __init__(self, templates_dir: Path | None = None):
        """Initialize the report engine.

        Args:
            templates_dir: Custom templates directory. Uses bundled templates if None.
        """
        if templates_dir is None:
            templates_dir = get_templates_dir()

        self.templates_dir = templates_dir
        self.env = Environment(
            loader=FileSystemLoader(templates_dir),
            autoescape=select_autoescape(disabled_extensions=["md", "j2"]),
            trim_blocks=True,
            lstrip_blocks=True,
        )
        self.env.filters["cell"] = format_cell

    def generate_summary(self, result: ExperimentResult, max_rows: int = 50) -> str:
        """Render a markdown summary of an experiment result.

        Args:
            result: Experiment result to summarise.
            max_rows: Table rows shown before truncation.

        Returns:
            Generated markdown.
        """
        template = self.env.get_template("summary.md.j2")
        metadata = dict(result.metadata)
        config = metadata.pop("config", {})
        return template.render(
            result=result,
            metadata=metadata,
            config_yaml=yaml.safe_dump(config, sort_keys=True).rstrip(),
            rows=result.rows[:max_rows],
            truncated=max(0, len(result.rows) - max_rows),
            precoder=result.precoder,
        )
