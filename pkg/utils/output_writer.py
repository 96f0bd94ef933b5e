"""
Output Writers
Atomic CSV / JSON emission for sweep and benchmark artifacts
"""
import json
import math
import os
import tempfile
from pathlib import Path

import numpy as np


def format_value(value):
    """
    Render one CSV cell

    Floats use 9 significant digits, NaN renders as an empty cell (a gap).

    Args:
        value: Cell value

    Returns:
        String cell
    """
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        if math.isnan(value):
            return ""
        return f"{float(value):.9g}"
    return str(value)


def to_jsonable(obj):
    """
    Convert numpy containers and scalars into plain JSON types

    Args:
        obj: Arbitrary nested structure

    Returns:
        Structure made of dict / list / str / int / float / bool / None
    """
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return to_jsonable(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        value = float(obj)
        return None if math.isnan(value) else value
    if isinstance(obj, Path):
        return str(obj)
    return obj


def _stage_text(path, text):
    """Write text to a temporary file next to `path` and return the temporary path"""
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_path = tempfile.mkstemp(prefix=f".{path.name}.", dir=str(path.parent))
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    except BaseException:
        os.remove(tmp_path)
        raise
    return tmp_path


def atomic_write_texts(files):
    """
    Write several files, renaming them into place only once all are staged

    Args:
        files: List of (destination path, text) pairs
    """
    staged = []
    try:
        for path, text in files:
            staged.append((_stage_text(Path(path), text), Path(path)))
        for tmp_path, path in staged:
            os.replace(tmp_path, path)
    except BaseException:
        for tmp_path, _ in staged:
            if os.path.exists(tmp_path):
                os.remove(tmp_path)
        raise


def render_csv(header, rows, comments=None):
    """
    Render CSV text: '#' comment lines, header row, LF line endings

    Args:
        header: Column names
        rows: Iterable of row sequences
        comments: Optional list of comment strings

    Returns:
        CSV text
    """
    lines = [f"# {c}" for c in (comments or [])]
    lines.append(",".join(header))
    for row in rows:
        lines.append(",".join(format_value(v) for v in row))
    return "\n".join(lines) + "\n"


def render_json(payload):
    """Render a payload as indented JSON text"""
    return json.dumps(to_jsonable(payload), indent=2, sort_keys=False) + "\n"


def write_artifacts(prefix, header, rows, payload, comments=None):
    """
    Write `<prefix>.csv` and `<prefix>.json`

    Both files are rendered, then both are staged as temporary files,
    and only then renamed into place.

    Args:
        prefix: Output path prefix
        header: CSV column names
        rows: CSV rows
        payload: JSON payload (must include the effective configuration)
        comments: CSV comment lines

    Returns:
        Tuple of (csv_path, json_path)
    """
    csv_text = render_csv(header, rows, comments)
    json_text = render_json(payload)
    csv_path = Path(f"{prefix}.csv")
    json_path = Path(f"{prefix}.json")
    atomic_write_texts([(csv_path, csv_text), (json_path, json_text)])
    return csv_path, json_path
