"""
Result-file writers.

CSV numbers are written with 17 significant digits. JSON floats use the
shortest repr that round-trips, which is equally exact. Complex values
become [re, im] pairs and numpy scalars or arrays become plain Python values.
"""

import csv
import json
from pathlib import Path
from typing import Any, Iterable, Sequence, Union

import numpy as np

PathLike = Union[str, Path]


def format_float(value: float) -> str:
    """Format a float with 17 significant digits."""
    return f"{float(value):.17g}"


def to_jsonable(value: Any) -> Any:
    """Recursively convert numpy and complex values into JSON-friendly types."""
    if isinstance(value, dict):
        return {str(key): to_jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(item) for item in value]
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if isinstance(value, (complex, np.complexfloating)):
        return [float(value.real), float(value.imag)]
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, Path):
        return str(value)
    return value


def write_json(path: PathLike, payload: Any) -> Path:
    """Write a payload as indented, key-sorted JSON and return the path."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open('w', encoding='utf-8') as handle:
        json.dump(to_jsonable(payload), handle, indent=2, sort_keys=True)
        handle.write('\n')
    return path


def write_csv(path: PathLike, header: Sequence[str], rows: Iterable[Sequence[float]]) -> Path:
    """Write numeric rows to CSV with 17 significant digits."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open('w', encoding='utf-8', newline='') as handle:
        writer = csv.writer(handle, lineterminator='\n')
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_float(value) for value in row])
    return path
