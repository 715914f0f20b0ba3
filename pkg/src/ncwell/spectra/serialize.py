"""CSV/JSON emission with fixed float formatting and key order."""

from __future__ import annotations

import csv
import io
import json

from .levels import SpectrumResult
from .oscillator import PerturbationReport

FLOAT_FORMAT = ".12g"


def fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, float):
        return format(x, FLOAT_FORMAT)
    return str(x)


def normalize(obj):
    """Round floats to 12 significant digits recursively (keys keep insertion order)."""
    if isinstance(obj, float):
        return float(format(obj, FLOAT_FORMAT))
    if isinstance(obj, dict):
        return {str(k): normalize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [normalize(v) for v in obj]
    return obj


def dumps(obj) -> str:
    return json.dumps(normalize(obj), indent=2, ensure_ascii=True) + "\n"


def rows_to_csv(rows: list[dict], columns: list[str] | None = None) -> str:
    columns = columns or (list(rows[0]) if rows else [])
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for r in rows:
        w.writerow([fmt(r.get(c)) for c in columns])
    return buf.getvalue()


def spectrum_rows(result: SpectrumResult) -> list[dict]:
    return [
        {
            "quantum_numbers": " ".join(str(q) for q in lv.quantum_numbers),
            "energy_J": lv.energy_J,
            "energy_eV": lv.energy_eV,
            "method": result.method.value,
            "basis_size": result.basis_size,
        }
        for lv in result.levels
    ]


def spectrum_to_dict(result: SpectrumResult) -> dict:
    return {
        "method": result.method.value,
        "basis_size": result.basis_size,
        "levels": [
            {"quantum_numbers": list(lv.quantum_numbers), "energy_J": lv.energy_J, "energy_eV": lv.energy_eV}
            for lv in result.levels
        ],
    }


def spectrum_to_json(result: SpectrumResult) -> str:
    return dumps(spectrum_to_dict(result))


def spectrum_to_csv(result: SpectrumResult) -> str:
    return rows_to_csv(spectrum_rows(result))


def perturbation_to_json(report: PerturbationReport) -> str:
    return dumps(report.as_dict())


def perturbation_to_csv(report: PerturbationReport) -> str:
    return rows_to_csv([s.as_row() for s in report.states])
