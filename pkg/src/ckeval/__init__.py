"""ckeval: C&K metric computation, rule-based quality assessment, and
version comparison for object-oriented projects."""

from .metrics import (
    METRICS,
    MetricRecord,
    ProjectMetrics,
    cbo,
    compute_all,
    dit,
    lcom,
    noc,
    rfc,
    wmc,
)
from .model import (
    CallRef,
    ClassInfo,
    ClassModel,
    Diagnostic,
    FieldInfo,
    MethodInfo,
    load_class_model,
    serialize_model,
    validate_model,
)
from .rules import (
    Assessment,
    Fact,
    Interval,
    KnowledgeBase,
    Level,
    Rule,
    ValueSet,
    default_rule_base,
    evaluate_project,
    filter_by_ranges,
    forward_chain,
    load_rules,
    paper_rule_preset,
    serialize_rules,
)
from .versions import VersionRecord, VersionVerdict, compare_versions, load_versions

__version__ = "0.1.0"

__all__ = [
    "METRICS",
    "Assessment",
    "CallRef",
    "ClassInfo",
    "ClassModel",
    "Diagnostic",
    "Fact",
    "FieldInfo",
    "Interval",
    "KnowledgeBase",
    "Level",
    "MethodInfo",
    "MetricRecord",
    "ProjectMetrics",
    "Rule",
    "ValueSet",
    "VersionRecord",
    "VersionVerdict",
    "cbo",
    "compare_versions",
    "compute_all",
    "default_rule_base",
    "dit",
    "evaluate_project",
    "filter_by_ranges",
    "forward_chain",
    "lcom",
    "load_class_model",
    "load_rules",
    "load_versions",
    "noc",
    "paper_rule_preset",
    "rfc",
    "serialize_model",
    "serialize_rules",
    "validate_model",
    "wmc",
]
