"""On-disk formats for scan results: CSV and JSON, written atomically.

CSV files carry a '#'-prefixed metadata preamble (one 'key = value' line
per entry), a header line, and one data row per point.  Values use
17-significant-digit scientific notation so parsing a written file
recovers every float bit-exactly.  Undefined values are the token 'nan',
never 0.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

import numpy as np

from .scan import ScanResult


def _format_value(x: float) -> str:
    return f"{x:.16e}"


def _atomic_write_text(path: Path, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def csv_text(result: ScanResult) -> str:
    lines = [f"# {key} = {value}" for key, value in result.meta.items()]
    lines.append(",".join(result.columns))
    for row in result.data:
        lines.append(",".join(_format_value(v) for v in row))
    return "\n".join(lines) + "\n"


def csv_data_section(result: ScanResult) -> str:
    """Header plus rows without the metadata preamble (for byte comparison)."""
    lines = [",".join(result.columns)]
    for row in result.data:
        lines.append(",".join(_format_value(v) for v in row))
    return "\n".join(lines) + "\n"


def write_csv(result: ScanResult, path) -> None:
    _atomic_write_text(Path(path), csv_text(result))


def read_csv(path) -> ScanResult:
    meta: dict = {}
    columns: tuple[str, ...] = ()
    rows: list[list[float]] = []
    with open(path) as handle:
        for line in handle:
            line = line.rstrip("\n")
            if not line:
                continue
            if line.startswith("#"):
                key, _, value = line[1:].partition("=")
                meta[key.strip()] = value.strip()
            elif not columns:
                columns = tuple(line.split(","))
            else:
                rows.append([float(v) for v in line.split(",")])
    data = np.array(rows) if rows else np.empty((0, len(columns)))
    return ScanResult(columns=columns, data=data, meta=meta)


def write_json(result: ScanResult, path) -> None:
    payload = {
        "meta": result.meta,
        "columns": list(result.columns),
        "rows": result.data.tolist(),
    }
    _atomic_write_text(Path(path), json.dumps(payload, indent=1) + "\n")


def read_json(path) -> ScanResult:
    with open(path) as handle:
        payload = json.load(handle)
    rows = payload["rows"]
    columns = tuple(payload["columns"])
    data = np.array(rows) if rows else np.empty((0, len(columns)))
    return ScanResult(columns=columns, data=data, meta=payload["meta"])
