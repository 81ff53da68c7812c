"""CSV/JSON table writers shared by the CLI.

The CSV dialect: comma separator, ``.`` decimal point, one header row, and
optional leading metadata lines prefixed ``#``.  Files are written to a
temporary sibling and atomically renamed so failures never leave partial
output behind.
"""

from __future__ import annotations

import json
import os
import sys
import tempfile
from typing import Dict, List, Optional, Sequence


def format_cell(value) -> str:
    if isinstance(value, float):
        return repr(float(value))  # normalizes numpy scalars too
    return str(value)


def render_csv(rows: Sequence[dict], columns: Sequence[str],
               metadata: Optional[Dict[str, str]] = None) -> str:
    lines = []
    for key, val in (metadata or {}).items():
        lines.append(f"# {key}: {val}")
    lines.append(",".join(columns))
    for row in rows:
        lines.append(",".join(format_cell(row.get(col, "")) for col in columns))
    return "\n".join(lines) + "\n"


def render_json(rows: Sequence[dict], columns: Sequence[str],
                metadata: Optional[Dict[str, str]] = None) -> str:
    payload = {"metadata": metadata or {},
               "columns": list(columns),
               "rows": [{col: row.get(col) for col in columns} for row in rows]}
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def write_text(path: Optional[str], text: str) -> None:
    """Atomic write; ``None`` or ``-`` streams to stdout."""
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_table(path: Optional[str], rows: Sequence[dict], columns: Sequence[str],
                metadata: Optional[Dict[str, str]] = None, fmt: str = "csv") -> None:
    if fmt == "csv":
        write_text(path, render_csv(rows, columns, metadata))
    elif fmt == "json":
        write_text(path, render_json(rows, columns, metadata))
    else:
        raise ValueError(f"unknown format {fmt!r}")
