"""CSV and JSON export of density evaluations."""
from __future__ import annotations

import csv
import io
import json

import numpy as np


def density_rows(xs, f, extra) -> list[tuple[float, float, float]]:
    xs = np.asarray(xs, dtype=float)
    f = np.real(np.asarray(f))
    extra = np.asarray(extra, dtype=float) if extra is not None else np.zeros_like(xs)
    return [(float(a), float(b), float(c)) for a, b, c in zip(xs, f, extra)]


def density_to_csv(xs, f, extra=None, extra_name: str = "stderr_or_residual") -> str:
    """Columns ``x, f, stderr_or_residual``."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["x", "f", extra_name])
    for row in density_rows(xs, f, extra):
        w.writerow([repr(v) for v in row])
    return buf.getvalue()


def density_to_json(xs, f, extra=None, meta: dict | None = None) -> str:
    rows = density_rows(xs, f, extra)
    obj = {"x": [r[0] for r in rows], "f": [r[1] for r in rows],
           "stderr_or_residual": [r[2] for r in rows]}
    if meta:
        obj["meta"] = meta
    return json.dumps(obj)


def density_from_json(text: str) -> dict:
    obj = json.loads(text)
    for key in ("x", "f", "stderr_or_residual"):
        if key not in obj:
            raise ValueError(f"missing field {key!r}")
    return obj
