"""Deterministic JSON and CSV export."""

import csv
import io
import json
import logging
from pathlib import Path
from typing import Any, Union

from ..models.homotopy import HomotopyTrajectory

logger = logging.getLogger(__name__)

SIGNIFICANT_DIGITS = 12

PathLike = Union[str, Path]


def format_number(value: float) -> str:
    """Fixed 12-significant-digit text for a float."""
    return format(float(value), f".{SIGNIFICANT_DIGITS}g")


def round_floats(data: Any) -> Any:
    """Recursively round every float to 12 significant digits."""
    if isinstance(data, bool) or data is None:
        return data
    if isinstance(data, float):
        return float(format_number(data))
    if isinstance(data, dict):
        return {key: round_floats(value) for key, value in data.items()}
    if isinstance(data, (list, tuple)):
        return [round_floats(value) for value in data]
    return data


def to_json(data: Any) -> str:
    """Serialize with sorted keys and rounded floats; identical data gives identical text."""
    return json.dumps(round_floats(data), indent=2, sort_keys=True) + "\n"


def export_to_json(data: Any, filepath: PathLike) -> Path:
    """Export data to a JSON file.

    Args:
        data: JSON-serializable data (floats are rounded)
        filepath: Destination file path

    Returns:
        Path to exported file
    """
    path = Path(filepath)

    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(to_json(data))

    logger.info(f"Exported data to JSON: {path}")
    return path


def trajectory_to_csv(trajectory: HomotopyTrajectory) -> str:
    """``theta,lambda_1,...,lambda_n`` rows followed by ``# crossing theta=<value>`` comments."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["theta"] + [f"lambda_{i + 1}" for i in range(trajectory.dim)])
    for theta, row in zip(trajectory.theta_grid, trajectory.curves):
        writer.writerow([format_number(theta)] + [format_number(v) for v in row])
    for crossing in trajectory.crossings:
        buffer.write(f"# crossing theta={format_number(crossing.theta_hat)}\n")
    return buffer.getvalue()


def export_trajectory_csv(trajectory: HomotopyTrajectory, filepath: PathLike) -> Path:
    """Write a sampled homotopy to CSV.

    Returns:
        Path to exported file
    """
    path = Path(filepath)

    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(trajectory_to_csv(trajectory))

    logger.info(f"Exported {trajectory.steps + 1} rows to CSV: {path}")
    return path
