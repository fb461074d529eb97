"""Import/export of metric tables and version-means tables.

Two delimited text layouts are accepted, told apart by the header:

    CLASS,WMC,DIT,NOC,CBO,RFC,LCOM          per-class integer metrics
    VERSION[,PATH],WMC,DIT,NOC,CBO,RFC,LCOM per-version real-valued means

plus equivalent JSON documents (``schemaVersion: 1`` with a ``metrics`` or
``versions`` array). Everything that consumes a ProjectMetrics accepts
either representation, so external tools can feed the evaluator directly.
"""

import csv
import io
import json
from pathlib import Path

from .errors import InputError, SchemaError
from .metrics import METRICS, MetricRecord, ProjectMetrics, project_means
from .model import SCHEMA_VERSION, load_class_model
from . import metrics as _metrics

CLASS_HEADER = ("CLASS",) + METRICS
VERSION_HEADER = ("VERSION",) + METRICS
VERSION_PATH_HEADER = ("VERSION", "PATH") + METRICS


def format_value(value: float) -> str:
    """Render a metric value or mean: at most 3 decimals, no trailing zeros."""
    text = f"{value:.3f}".rstrip("0").rstrip(".")
    return text if text else "0"


# --- per-class metric tables -------------------------------------------------

def metrics_to_csv(pm: ProjectMetrics) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CLASS_HEADER)
    for rec in pm.per_class:
        writer.writerow([rec.class_name, *rec.values()])
    return out.getvalue()


def metrics_to_document(pm: ProjectMetrics) -> dict:
    return {
        "schemaVersion": SCHEMA_VERSION,
        "projectName": pm.project_name,
        "metrics": [
            {"class": rec.class_name,
             **{m.lower(): rec.value(m) for m in METRICS}}
            for rec in pm.per_class
        ],
        "means": {m.lower(): pm.means[m] for m in METRICS},
    }


def metrics_from_document(doc: dict, project_name: str = "") -> ProjectMetrics:
    rows = doc.get("metrics")
    if not isinstance(rows, list):
        raise SchemaError("metrics", "must be an array")
    records = []
    for i, row in enumerate(rows):
        path = f"metrics[{i}]"
        if not isinstance(row, dict):
            raise SchemaError(path, "row must be an object")
        name = row.get("class")
        if not isinstance(name, str) or not name:
            raise SchemaError(f"{path}.class", "must be a non-empty string")
        values = {}
        for m in METRICS:
            v = row.get(m.lower())
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise SchemaError(f"{path}.{m.lower()}",
                                  "must be a non-negative integer")
            values[m.lower()] = v
        records.append(MetricRecord(class_name=name, **values))
    records.sort(key=lambda r: r.class_name)
    return ProjectMetrics(project_name=doc.get("projectName", project_name),
                          per_class=tuple(records),
                          means=project_means(records))


def metrics_from_csv(text: str, project_name: str = "") -> ProjectMetrics:
    rows = list(csv.reader(io.StringIO(text)))
    rows = [r for r in rows if r and any(cell.strip() for cell in r)]
    if not rows or tuple(cell.strip().upper() for cell in rows[0]) != CLASS_HEADER:
        raise InputError("metrics table must start with header "
                         + ",".join(CLASS_HEADER))
    records = []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(CLASS_HEADER):
            raise InputError(f"line {lineno}: expected {len(CLASS_HEADER)} columns")
        name = row[0].strip()
        if not name:
            raise InputError(f"line {lineno}: empty class name")
        values = []
        for m, cell in zip(METRICS, row[1:]):
            try:
                v = int(cell.strip())
            except ValueError:
                raise InputError(f"line {lineno}: {m} value {cell.strip()!r} "
                                 "is not an integer") from None
            if v < 0:
                raise InputError(f"line {lineno}: {m} must be non-negative")
            values.append(v)
        records.append(MetricRecord(name, *values))
    records.sort(key=lambda r: r.class_name)
    return ProjectMetrics(project_name=project_name, per_class=tuple(records),
                          means=project_means(records))


# --- version mean tables -----------------------------------------------------

def versions_from_csv(text: str) -> list[dict]:
    """Rows of {version, path, means} from a VERSION[,PATH] table."""
    rows = list(csv.reader(io.StringIO(text)))
    rows = [r for r in rows if r and any(cell.strip() for cell in r)]
    if not rows:
        raise InputError("empty versions table")
    header = tuple(cell.strip().upper() for cell in rows[0])
    if header == VERSION_PATH_HEADER:
        has_path = True
    elif header == VERSION_HEADER:
        has_path = False
    else:
        raise InputError("versions table must start with header "
                         + ",".join(VERSION_HEADER) + " (PATH column optional)")
    out = []
    offset = 2 if has_path else 1
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(rows[0]):
            raise InputError(f"line {lineno}: expected {len(rows[0])} columns")
        name = row[0].strip()
        if not name:
            raise InputError(f"line {lineno}: empty version name")
        means = {}
        for m, cell in zip(METRICS, row[offset:]):
            try:
                v = float(cell.strip())
            except ValueError:
                raise InputError(f"line {lineno}: {m} value {cell.strip()!r} "
                                 "is not a number") from None
            if v < 0:
                raise InputError(f"line {lineno}: {m} must be non-negative")
            means[m] = v
        out.append({"version": name,
                    "path": row[1].strip() if has_path else "",
                    "means": means})
    return out


def versions_from_document(doc: dict) -> list[dict]:
    rows = doc.get("versions")
    if not isinstance(rows, list):
        raise SchemaError("versions", "must be an array")
    out = []
    for i, row in enumerate(rows):
        path = f"versions[{i}]"
        if not isinstance(row, dict):
            raise SchemaError(path, "version entry must be an object")
        name = row.get("version")
        if not isinstance(name, str) or not name:
            raise SchemaError(f"{path}.version", "must be a non-empty string")
        raw = row.get("means")
        if not isinstance(raw, dict):
            raise SchemaError(f"{path}.means", "must be an object")
        means = {}
        for m in METRICS:
            v = raw.get(m.lower())
            if not isinstance(v, (int, float)) or isinstance(v, bool) or v < 0:
                raise SchemaError(f"{path}.means.{m.lower()}",
                                  "must be a non-negative number")
            means[m] = float(v)
        source = row.get("path", "")
        if not isinstance(source, str):
            raise SchemaError(f"{path}.path", "must be a string")
        out.append({"version": name, "path": source, "means": means})
    return out


# --- file-level sniffing -----------------------------------------------------

def read_text(path: str | Path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None


def load_metrics_input(path: str | Path) -> ProjectMetrics:
    """Load a ProjectMetrics from a metrics table or a class model file."""
    text = read_text(path)
    kind, payload = sniff(text, str(path))
    if kind == "model":
        return _metrics.compute_all(load_class_model(payload))
    if kind == "metrics":
        if isinstance(payload, dict):
            return metrics_from_document(payload, project_name=Path(path).stem)
        return metrics_from_csv(payload, project_name=Path(path).stem)
    raise InputError(f"{path}: expected a metrics table or class model document")


def sniff(text: str, label: str) -> tuple[str, str | dict]:
    """Classify file content: class model, metrics table, or versions table."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"{label}: invalid JSON: {exc}") from None
        if not isinstance(doc, dict):
            raise InputError(f"{label}: top-level JSON value must be an object")
        if "classes" in doc:
            return "model", doc
        if "metrics" in doc:
            return "metrics", doc
        if "versions" in doc:
            return "versions", doc
        raise InputError(f"{label}: unrecognized document "
                         "(no classes, metrics, or versions key)")
    first = stripped.split("\n", 1)[0].strip().upper()
    if first.startswith("CLASS,"):
        return "metrics", text
    if first.startswith("VERSION,"):
        return "versions", text
    raise InputError(f"{label}: unrecognized file format")
