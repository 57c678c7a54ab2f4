"""Output documents: CSV and JSON encodings of one CLI run."""

import csv
import io
import json
import sys
from pathlib import Path
from typing import Any, Optional

from .. import __version__
from ..models import RunConfig


UNIT_LABELS = {
    "stress": {"natural": "hbar*c/length^4", "si": "J/m^3"},
    "torque": {"natural": "hbar*c/(length^5 rad)", "si": "J/(m^4 rad)"},
    "limit-table": {"natural": "hbar*c", "si": "J*m"},
    "green": {"natural": "dimensionless", "si": "dimensionless"},
}


def unit_label(command: str, units: str) -> str:
    """Units string reported alongside a command's values."""
    return UNIT_LABELS[command][units]


def build_document(run: RunConfig, results: dict, diagnostics: Optional[dict] = None) -> dict:
    """
    Assemble the output document.

    Args:
        run: Effective configuration (echoed as ``inputs``)
        results: Values produced by the command
        diagnostics: Audit data (extrapolation traces, checks); may be empty

    Returns:
        Mapping with keys inputs, results, diagnostics, version
    """
    return {
        "inputs": run.echo(),
        "results": results,
        "diagnostics": diagnostics or {},
        "version": __version__,
    }


def _csv_rows(results: dict) -> list[dict]:
    if "rows" in results:
        return list(results["rows"])
    if "checks" in results:
        return list(results["checks"])
    row = {}
    for key, value in results.items():
        if isinstance(value, list):
            value = "; ".join(str(v) for v in value)
        row[key] = value
    return [row]


def render_json(document: dict) -> str:
    # json encodes floats with repr: shortest round-trip decimal
    return json.dumps(document, indent=2, allow_nan=False) + "\n"


def render_csv(document: dict) -> str:
    """Header row plus one row per result, ``\\n`` line endings."""
    rows = _csv_rows(document["results"])
    buffer = io.StringIO()
    if rows:
        writer = csv.DictWriter(buffer, fieldnames=list(rows[0].keys()), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    return buffer.getvalue()


def render(document: dict, output_format: str) -> str:
    if output_format == "csv":
        return render_csv(document)
    return render_json(document)


def write_document(text: str, output_path: Optional[Path] = None) -> None:
    """
    Emit a fully rendered document.

    The text is built before anything is written, so a failed run never
    leaves a partial document behind.
    """
    if output_path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return

    output_path = Path(output_path)
    output_path.parent.mkdir(parents=True, exist_ok=True)
    with open(output_path, "w", encoding="utf-8", newline="") as f:
        f.write(text)


def payload_json(payload: Any) -> Optional[dict]:
    """Serialize a pydantic error payload (or None)."""
    if payload is None:
        return None
    return payload.model_dump(mode="json")
