"""Dataset ingestion, report rendering, and trace emission.

Two input formats normalize to the same AssessmentInput:

json            {"indices": [{"id", "name", "orientation", "weight"}, ...],
                 "periods": [{"label", "weight"}, ...],
                 "areas":   [{"name", "values": [[m rows of T reals]]}, ...]}
                where orientation is "benefit" | "cost" | "intermediate" |
                {"interval": [low, high]}. An optional top-level
                "description" string documents the dataset.

csv-bundle      a directory with indices.csv (id,name,orientation,weight,
                interval_low,interval_high), periods.csv (label,weight), and
                one plain numeric m x T grid per area in any other *.csv;
                the area name is the file stem.

Values are laid out row = index, column = period throughout.
"""

from __future__ import annotations

import csv
import hashlib
import json
import re
import sys
from pathlib import Path
from typing import TYPE_CHECKING

import numpy as np

from .model import (
    AreaSeries,
    AssessmentInput,
    IndexDefinition,
    Orientation,
    OrientationKind,
    StageMatrices,
    validate_input,
)

if TYPE_CHECKING:
    from .pipeline import AssessmentReport, RunConfig

_ORIENTATION_NAMES = ("benefit", "cost", "intermediate", "interval")


class InputFormatError(ValueError):
    """Raised when a dataset file cannot be parsed into the documented schema."""


def _parse_orientation(raw, locus: str) -> Orientation:
    if isinstance(raw, str):
        if raw == "interval":
            raise InputFormatError(
                f"{locus}: interval orientation requires bounds, "
                'use {"interval": [low, high]}'
            )
        if raw not in _ORIENTATION_NAMES:
            raise InputFormatError(
                f"{locus}: unknown orientation '{raw}' "
                f"(allowed: {', '.join(_ORIENTATION_NAMES)})"
            )
        return Orientation(OrientationKind(raw))
    if isinstance(raw, dict) and set(raw) == {"interval"}:
        bounds = raw["interval"]
        if not (isinstance(bounds, (list, tuple)) and len(bounds) == 2):
            raise InputFormatError(f"{locus}: interval bounds must be a [low, high] pair")
        return Orientation.interval(float(bounds[0]), float(bounds[1]))
    raise InputFormatError(
        f"{locus}: orientation must be one of {', '.join(_ORIENTATION_NAMES)} "
        'or {"interval": [low, high]}'
    )


def _require(d: dict, key: str, locus: str):
    if key not in d:
        raise InputFormatError(f"{locus}: missing required field '{key}'")
    return d[key]


def input_from_dict(doc: dict) -> AssessmentInput:
    """Build an (unvalidated) AssessmentInput from the json document schema."""
    if not isinstance(doc, dict):
        raise InputFormatError("top level must be an object")
    indices = []
    for k, entry in enumerate(_require(doc, "indices", "input")):
        locus = f"indices[{k}]"
        indices.append(
            IndexDefinition(
                id=str(_require(entry, "id", locus)),
                name=str(_require(entry, "name", locus)),
                orientation=_parse_orientation(_require(entry, "orientation", locus), locus),
                weight=float(_require(entry, "weight", locus)),
            )
        )
    labels, time_weights = [], []
    for k, entry in enumerate(_require(doc, "periods", "input")):
        locus = f"periods[{k}]"
        labels.append(str(_require(entry, "label", locus)))
        time_weights.append(float(_require(entry, "weight", locus)))
    areas = []
    for k, entry in enumerate(_require(doc, "areas", "input")):
        locus = f"areas[{k}]"
        name = str(_require(entry, "name", locus))
        values = _require(entry, "values", locus)
        try:
            arr = np.array(values, dtype=float)
        except (TypeError, ValueError) as exc:
            raise InputFormatError(
                f"{locus} ('{name}'): values must be a rectangular grid of numbers: {exc}"
            ) from exc
        if arr.ndim != 2:
            raise InputFormatError(
                f"{locus} ('{name}'): values must be a rectangular grid of numbers"
            )
        areas.append(AreaSeries(name=name, values=arr))
    return AssessmentInput(
        indices=tuple(indices),
        periods=tuple(labels),
        time_weights=np.array(time_weights, dtype=float),
        areas=tuple(areas),
    )


def input_to_dict(inp: AssessmentInput) -> dict:
    def orientation_doc(o: Orientation):
        if o.kind is OrientationKind.INTERVAL:
            return {"interval": [o.interval_low, o.interval_high]}
        return o.kind.value

    return {
        "indices": [
            {"id": d.id, "name": d.name, "orientation": orientation_doc(d.orientation),
             "weight": d.weight}
            for d in inp.indices
        ],
        "periods": [
            {"label": label, "weight": float(w)}
            for label, w in zip(inp.periods, inp.time_weights)
        ],
        "areas": [
            {"name": a.name, "values": a.values.tolist()} for a in inp.areas
        ],
    }


def input_to_json(inp: AssessmentInput) -> str:
    return json.dumps(input_to_dict(inp), indent=2)


def compute_fingerprint(inp: AssessmentInput) -> str:
    """Content hash of the dataset, independent of file formatting."""
    canonical = json.dumps(input_to_dict(inp), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def _load_json(path: Path) -> AssessmentInput:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    return input_from_dict(doc)


def _csv_rows(path: Path) -> list[dict]:
    with open(path, newline="", encoding="utf-8") as fh:
        return list(csv.DictReader(fh))


def _load_csv_bundle(root: Path) -> AssessmentInput:
    idx_path, per_path = root / "indices.csv", root / "periods.csv"
    for required in (idx_path, per_path):
        if not required.is_file():
            raise InputFormatError(f"csv bundle {root}: missing {required.name}")

    indices = []
    for k, row in enumerate(_csv_rows(idx_path)):
        locus = f"{idx_path.name} row {k + 2}"
        try:
            kind = (row.get("orientation") or "").strip()
            if kind == "interval":
                orientation = Orientation.interval(
                    float(row["interval_low"]), float(row["interval_high"])
                )
            else:
                orientation = _parse_orientation(kind, locus)
            indices.append(
                IndexDefinition(
                    id=row["id"].strip(),
                    name=(row.get("name") or row["id"]).strip(),
                    orientation=orientation,
                    weight=float(row["weight"]),
                )
            )
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, InputFormatError):
                raise
            raise InputFormatError(f"{locus}: {exc}") from exc

    labels, time_weights = [], []
    for k, row in enumerate(_csv_rows(per_path)):
        locus = f"{per_path.name} row {k + 2}"
        try:
            labels.append(row["label"].strip())
            time_weights.append(float(row["weight"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputFormatError(f"{locus}: {exc}") from exc

    areas = []
    area_files = sorted(
        p for p in root.glob("*.csv") if p.name not in ("indices.csv", "periods.csv")
    )
    if not area_files:
        raise InputFormatError(f"csv bundle {root}: no area files found")
    for path in area_files:
        rows = []
        with open(path, newline="", encoding="utf-8") as fh:
            for k, row in enumerate(csv.reader(fh)):
                if not row:
                    continue
                try:
                    rows.append([float(v) for v in row])
                except ValueError as exc:
                    raise InputFormatError(f"{path.name} row {k + 1}: {exc}") from exc
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise InputFormatError(f"{path.name}: rows have differing widths {sorted(widths)}")
        areas.append(AreaSeries(name=path.stem, values=np.array(rows, dtype=float)))

    return AssessmentInput(
        indices=tuple(indices),
        periods=tuple(labels),
        time_weights=np.array(time_weights, dtype=float),
        areas=tuple(areas),
    )


def load_input(path, fmt: str | None = None) -> AssessmentInput:
    """Parse a dataset file (json) or directory (csv-bundle) and validate it.

    Parse problems raise InputFormatError with a file/field locus;
    validation problems raise ValidationError listing every violation.
    """
    path = Path(path)
    if fmt is None:
        fmt = "csv-bundle" if path.is_dir() else "json"
    if fmt == "json":
        inp = _load_json(path)
    elif fmt == "csv-bundle":
        inp = _load_csv_bundle(path)
    else:
        raise InputFormatError(f"unknown input format '{fmt}' (allowed: json, csv-bundle)")
    return validate_input(inp)


# ---------------------------------------------------------------------------
# report emission

def report_to_dict(report: "AssessmentReport") -> dict:
    return {
        "areas": [
            {
                "name": a.name,
                "gamma_pos": a.gamma_pos,
                "gamma_neg": a.gamma_neg,
                "superiority": a.superiority,
                "rank": a.rank,
                "level": a.level.label,
                "tied": a.tied,
            }
            for a in report.result.areas
        ],
        "config": report.result.config_echo,
        "fingerprint": report.fingerprint,
        "version": report.version,
        "duration_seconds": report.duration_seconds,
    }


def render_text(report: "AssessmentReport", decimals: int = 2) -> str:
    headers = ("area", "gamma+", "gamma-", "superiority", "rank", "level")
    rows = [
        (
            a.name,
            f"{a.gamma_pos:.{decimals}f}",
            f"{a.gamma_neg:.{decimals}f}",
            f"{a.superiority:.{decimals}f}",
            f"{a.rank}{'*' if a.tied else ''}",
            a.level.label,
        )
        for a in report.result.areas
    ]
    widths = [max(len(h), *(len(r[c]) for r in rows)) for c, h in enumerate(headers)]
    lines = [
        "  ".join(h.ljust(w) for h, w in zip(headers, widths)),
        "  ".join("-" * w for w in widths),
    ]
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)) for row in rows]
    if any(a.tied for a in report.result.areas):
        lines.append("* tied superiority degree")
    lines.append(f"dataset {report.fingerprint[:12]}  tool {report.version}")
    return "\n".join(lines) + "\n"


def render_json(report: "AssessmentReport") -> str:
    return json.dumps(report_to_dict(report), indent=2) + "\n"


def render_csv(report: "AssessmentReport") -> str:
    lines = ["name,gamma_pos,gamma_neg,superiority,rank,level,tied"]
    for a in report.result.areas:
        lines.append(
            f"{a.name},{a.gamma_pos!r},{a.gamma_neg!r},{a.superiority!r},"
            f"{a.rank},{a.level.label},{str(a.tied).lower()}"
        )
    return "\n".join(lines) + "\n"


def emit_report(report: "AssessmentReport", config: "RunConfig", destination=None) -> None:
    """Write the report in the configured format to a path or stdout."""
    if config.output_format == "json":
        payload = render_json(report)
    elif config.output_format == "csv":
        payload = render_csv(report)
    else:
        payload = render_text(report, config.report_decimals)
    if destination is None:
        sys.stdout.write(payload)
    else:
        Path(destination).write_text(payload, encoding="utf-8")


# ---------------------------------------------------------------------------
# trace emission

def _slug(name: str) -> str:
    s = re.sub(r"[^A-Za-z0-9_-]+", "_", name).strip("_").lower()
    return s or "area"


def _write_matrix(path: Path, matrix: np.ndarray, row_labels, col_labels) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow([""] + list(col_labels))
        for label, row in zip(row_labels, matrix):
            writer.writerow([label] + [repr(float(v)) for v in row])


def write_trace(trace: StageMatrices, out_dir) -> list[Path]:
    """Dump trace matrices as CSVs with index-id rows and period-label columns.

    Volume-stage matrices are one cell smaller per axis; their rows and
    columns are labeled by the window's upper-left index id and period.
    Writes four shared files (both ideal matrices and their volumes) and six
    files per area (standardized, weighted, both volume differences, both
    coefficient matrices).
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    ids, labels = trace.index_ids, trace.period_labels
    win_ids, win_labels = ids[:-1], labels[:-1]
    written: list[Path] = []

    def emit(name: str, matrix: np.ndarray, rows, cols) -> None:
        path = out / f"{name}.csv"
        _write_matrix(path, matrix, rows, cols)
        written.append(path)

    emit("positive_ideal", trace.positive_ideal, ids, labels)
    emit("negative_ideal", trace.negative_ideal, ids, labels)
    emit("positive_ideal_volume", trace.volume_positive, win_ids, win_labels)
    emit("negative_ideal_volume", trace.volume_negative, win_ids, win_labels)

    slugs: dict[str, int] = {}
    for k, name in enumerate(trace.area_names):
        slug = _slug(name)
        if slug in slugs:
            slug = f"{slug}_{k + 1}"
        slugs[slug] = k
        emit(f"{slug}_standardized", trace.standardized[k], ids, labels)
        emit(f"{slug}_weighted", trace.weighted[k], ids, labels)
        emit(f"{slug}_volume_diff_pos", trace.volume_diff_pos[k], win_ids, win_labels)
        emit(f"{slug}_volume_diff_neg", trace.volume_diff_neg[k], win_ids, win_labels)
        emit(f"{slug}_coeff_pos", trace.coeff_pos[k], win_ids, win_labels)
        emit(f"{slug}_coeff_neg", trace.coeff_neg[k], win_ids, win_labels)
    return written
