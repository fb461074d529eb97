"""Structured (JSON) export of evaluation results.

Exports are lossless: fired rules, assessments, verdicts, range filters
and input provenance (paths plus file modification timestamps) all appear
in the document. Serialization is canonical, so exporting an imported
document reproduces it byte for byte; provenance is carried, never
regenerated, which keeps repeated runs on identical inputs identical.
"""

from datetime import datetime, timezone
import json
from pathlib import Path

from .errors import InputError
from .rules import Assessment, Interval, KnowledgeBase, LEVEL_NAMES, RangeFilter
from .versions import VersionVerdict

EXPORT_SCHEMA_VERSION = 1


def input_provenance(paths: list[str | Path]) -> list[dict]:
    entries = []
    for path in paths:
        p = Path(path)
        try:
            stamp = datetime.fromtimestamp(p.stat().st_mtime, tz=timezone.utc)
            modified = stamp.isoformat(timespec="seconds")
        except OSError:
            modified = None
        entries.append({"path": str(path), "modified": modified})
    return entries


def assessments_document(assessments: list[Assessment], kb: KnowledgeBase,
                         scope: str, inputs: list[dict]) -> dict:
    return {
        "schemaVersion": EXPORT_SCHEMA_VERSION,
        "kind": "assessments",
        "inputs": inputs,
        "knowledgeBase": kb.name,
        "scope": scope,
        "assessments": [
            {
                "scope": a.scope,
                "conclusions": [
                    {"attribute": attribute,
                     "level": LEVEL_NAMES[level],
                     "rule": a.derived_by[attribute]}
                    for attribute, level in a.pairs()
                ],
                "firedRules": list(a.fired_rules),
            }
            for a in assessments
        ],
    }


def verdicts_document(verdicts: list[VersionVerdict],
                      inputs: list[dict]) -> dict:
    return {
        "schemaVersion": EXPORT_SCHEMA_VERSION,
        "kind": "verdicts",
        "inputs": inputs,
        "verdicts": [
            {
                "metric": v.metric,
                "min": {"versions": list(v.min_versions), "value": v.min_value},
                "max": {"versions": list(v.max_versions), "value": v.max_value},
                "interpretation": {
                    "qualityBest": list(v.quality_best),
                    "qualityWorst": list(v.quality_worst),
                    "effortMost": list(v.effort_most),
                    "effortLeast": list(v.effort_least),
                },
            }
            for v in verdicts
        ],
    }


def filters_document(filters: list[RangeFilter], inputs: list[dict]) -> dict:
    out = []
    for f in filters:
        if isinstance(f.condition, Interval):
            condition = {"range": [f.condition.lo, f.condition.hi]}
        else:
            condition = {"values": sorted(f.condition.values)}
        out.append({
            "metric": f.metric,
            "condition": condition,
            "inRange": [{"class": r.class_name, "value": r.value(f.metric)}
                        for r in f.in_range],
            "outOfRange": [{"class": r.class_name, "value": r.value(f.metric)}
                           for r in f.out_of_range],
        })
    return {
        "schemaVersion": EXPORT_SCHEMA_VERSION,
        "kind": "filters",
        "inputs": inputs,
        "filters": out,
    }


def export_structured(document: dict) -> str:
    """Canonical JSON text for any result document."""
    return json.dumps(document, indent=2, ensure_ascii=False,
                      sort_keys=True) + "\n"


def import_structured(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid structured document: {exc}") from None
    if not isinstance(doc, dict) or "kind" not in doc:
        raise InputError("structured document must be an object with a kind")
    return doc
