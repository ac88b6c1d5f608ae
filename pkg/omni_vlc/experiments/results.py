"""Experiment results and their CSV serialization.

All floats are written with 17 significant digits so CSV output round-trips
exactly and reruns with the same config produce identical bytes.
"""

import csv
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import yaml

from omni_vlc.calc.link_sim import BerResult
from omni_vlc.calc.metrics import PowerMap
from omni_vlc.calc.precoder import PrecodingMatrix


def format_cell(value: Any) -> str:
    """Format one CSV cell."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


@dataclass
class ExperimentResult:
    """Tabular result of one experiment plus its artifacts."""

    kind: str
    columns: list[str]
    rows: list[list[Any]]
    metadata: dict[str, Any] = field(default_factory=dict)
    precoder: PrecodingMatrix | None = None
    power_map: PowerMap | None = None
    ber: tuple[BerResult, BerResult] | None = None

    def column(self, name: str) -> list[Any]:
        """Values of one column, in row order."""
        index = self.columns.index(name)
        return [row[index] for row in self.rows]


def write_table(path: str | Path, columns: list[str], rows: list[list[Any]]) -> None:
    """Write a header row and data rows."""
    with open(path, "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(columns)
        for row in rows:
            writer.writerow([format_cell(v) for v in row])


def write_ber_breakdown(path: str | Path, ber: tuple[BerResult, BerResult]) -> None:
    """Write per-user BER for both precoders at every noise variance."""
    proposed, classical = ber
    rows = []
    for k, delta_sq in enumerate(proposed.noise_sweep):
        for user in range(proposed.per_user.shape[1]):
            rows.append(
                [
                    float(delta_sq),
                    user,
                    float(proposed.per_user[k, user]),
                    float(classical.per_user[k, user]),
                ]
            )
    write_table(path, ["delta_sq", "user", "ber_proposed", "ber_classical"], rows)


def sidecar_path(out: Path, suffix: str) -> Path:
    """Path next to ``out`` with ``suffix`` appended to the stem."""
    return out.with_name(f"{out.stem}_{suffix}{out.suffix or '.csv'}")


def write_result(result: ExperimentResult, out: str | Path) -> list[Path]:
    """Write the main CSV, sidecar artifacts and a metadata file.

    Returns:
        Paths written, main CSV first.
    """
    out = Path(out)
    out.parent.mkdir(parents=True, exist_ok=True)
    written = [out]

    if result.power_map is not None:
        result.power_map.to_csv(out)
    else:
        write_table(out, result.columns, result.rows)

    if result.precoder is not None:
        precoder_path = sidecar_path(out, "precoder")
        result.precoder.to_csv(precoder_path)
        written.append(precoder_path)

    if result.ber is not None:
        users_path = sidecar_path(out, "users")
        write_ber_breakdown(users_path, result.ber)
        written.append(users_path)

    meta_path = out.with_name(f"{out.stem}_meta.yaml")
    meta_path.write_text(yaml.safe_dump(result.metadata, sort_keys=True))
    written.append(meta_path)
    return written
