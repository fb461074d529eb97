"""If-then metric rules and the forward-chaining evaluator.

A rule maps one metric band (closed interval or explicit value set) to
quality-attribute conclusions. Bands of one metric are pairwise disjoint,
so a fact fires at most one rule; chaining is data driven: facts are taken
in input order and each match asserts its conclusions immediately.

Two bases ship with the package: ``default`` (42 rules, 6 metrics x 7
disjoint bands covering every non-negative value) and ``paper`` (the three
published example rules, encoded verbatim). Band thresholds live in the
rules files, not in code, and users may load their own.
"""

from dataclasses import dataclass, field
from decimal import Decimal, ROUND_HALF_UP
from enum import IntEnum
from importlib import resources
import itertools
import json

from .errors import RuleError, RuleOverlapError, SchemaError, UsageError
from .metrics import METRICS, ProjectMetrics
from .tables import format_value, read_text

BUILTIN_BASES = ("default", "paper")

#: Registered quality attributes; extensible via register_attribute().
ATTRIBUTES = {
    "complexity",
    "understandability",
    "testability",
    "reusability",
    "robustness",
    "faultLikelihood",
    "maintenanceEffort",
    "quality",
    "coupling",
    "modularDesign",
    "inheritanceDepth",
    "methodCount",
}


def register_attribute(name: str) -> None:
    if not name or not name.strip():
        raise ValueError("attribute name must be non-empty")
    ATTRIBUTES.add(name)


class Level(IntEnum):
    VERY_LOW = 1
    LOW = 2
    NORMAL = 3
    HIGH = 4
    VERY_HIGH = 5


LEVEL_NAMES = {
    Level.VERY_LOW: "VeryLow",
    Level.LOW: "Low",
    Level.NORMAL: "Normal",
    Level.HIGH: "High",
    Level.VERY_HIGH: "VeryHigh",
}
_LEVEL_BY_NAME = {name: level for level, name in LEVEL_NAMES.items()}


def level_from_name(name: str) -> Level:
    try:
        return _LEVEL_BY_NAME[name]
    except KeyError:
        raise RuleError(f"unknown level {name!r}; expected one of "
                        + ", ".join(LEVEL_NAMES.values())) from None


@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi]; hi None means unbounded above."""

    lo: float
    hi: float | None = None

    def matches(self, value: float) -> bool:
        return value >= self.lo and (self.hi is None or value <= self.hi)

    def describe(self) -> str:
        from .tables import format_value
        if self.hi is None:
            return f"{format_value(self.lo)}+"
        return f"{format_value(self.lo)} - {format_value(self.hi)}"


@dataclass(frozen=True)
class ValueSet:
    values: frozenset[float]

    def matches(self, value: float) -> bool:
        return value in self.values

    def describe(self) -> str:
        from .tables import format_value
        return ", ".join(format_value(v) for v in sorted(self.values))


Condition = Interval | ValueSet


def conditions_overlap(a: Condition, b: Condition) -> float | None:
    """A value matched by both conditions, or None when disjoint."""
    if isinstance(a, Interval) and isinstance(b, Interval):
        lo = max(a.lo, b.lo)
        if (a.hi is None or lo <= a.hi) and (b.hi is None or lo <= b.hi):
            return lo
        return None
    if isinstance(a, ValueSet) and isinstance(b, ValueSet):
        common = a.values & b.values
        return min(common) if common else None
    values = a.values if isinstance(a, ValueSet) else b.values
    interval = b if isinstance(a, ValueSet) else a
    hits = sorted(v for v in values if interval.matches(v))
    return hits[0] if hits else None


@dataclass(frozen=True)
class Rule:
    id: str
    metric: str
    condition: Condition
    conclusions: tuple[tuple[str, Level], ...]

    def matches(self, value: float) -> bool:
        return self.condition.matches(value)


@dataclass(frozen=True)
class Fact:
    metric: str
    value: float
    scope: str = "project"


@dataclass
class Assessment:
    scope: str
    derived: dict[str, Level] = field(default_factory=dict)
    derived_by: dict[str, str] = field(default_factory=dict)
    fired_rules: list[str] = field(default_factory=list)

    def pairs(self) -> list[tuple[str, Level]]:
        return list(self.derived.items())


@dataclass(frozen=True)
class KnowledgeBase:
    name: str
    rules: tuple[Rule, ...]

    def rules_for(self, metric: str) -> list[Rule]:
        return [r for r in self.rules if r.metric == metric]

    def match(self, metric: str, value: float) -> Rule | None:
        for rule in self.rules:
            if rule.metric == metric and rule.matches(value):
                return rule
        return None

    def is_complete(self, upper: int = 10000) -> bool:
        """Whether every integer 0..upper of every metric matches a rule."""
        for metric in METRICS:
            rules = self.rules_for(metric)
            if not any(isinstance(r.condition, Interval) and r.condition.hi is None
                       for r in rules):
                return False
            for v in range(upper + 1):
                if not any(r.matches(v) for r in rules):
                    return False
        return True


def build_knowledge_base(name: str, rules: list[Rule]) -> KnowledgeBase:
    """Validate invariants and normalize rule order."""
    if not rules:
        raise RuleError("rule base is empty")
    seen_ids: set[str] = set()
    for rule in rules:
        if rule.id in seen_ids:
            raise RuleError(f"duplicate rule id {rule.id!r}")
        seen_ids.add(rule.id)
        if rule.metric not in METRICS:
            raise RuleError(f"rule {rule.id!r}: unknown metric {rule.metric!r}")
        if not rule.conclusions:
            raise RuleError(f"rule {rule.id!r}: conclusions must be non-empty")
        for attribute, _ in rule.conclusions:
            if attribute not in ATTRIBUTES:
                raise RuleError(f"rule {rule.id!r}: unregistered attribute "
                                f"{attribute!r}")
        if isinstance(rule.condition, Interval):
            lo, hi = rule.condition.lo, rule.condition.hi
            if lo < 0 or (hi is not None and hi < lo):
                raise RuleError(f"rule {rule.id!r}: invalid range")
        else:
            if not rule.condition.values:
                raise RuleError(f"rule {rule.id!r}: value set must be non-empty")
            if any(v < 0 for v in rule.condition.values):
                raise RuleError(f"rule {rule.id!r}: values must be non-negative")

    for metric in METRICS:
        of_metric = [r for r in rules if r.metric == metric]
        for a, b in itertools.combinations(of_metric, 2):
            hit = conditions_overlap(a.condition, b.condition)
            if hit is not None:
                raise RuleOverlapError(metric, a.id, b.id, hit)

    ordered = sorted(rules, key=_rule_sort_key)
    return KnowledgeBase(name=name, rules=tuple(ordered))


def _rule_sort_key(rule: Rule) -> tuple:
    if isinstance(rule.condition, Interval):
        low = rule.condition.lo
    else:
        low = min(rule.condition.values)
    return (METRICS.index(rule.metric), low, rule.id)


# --- document form -----------------------------------------------------------

def load_rules(document: str | dict) -> KnowledgeBase:
    """Parse a rules document and validate the resulting base."""
    if isinstance(document, str):
        try:
            doc = json.loads(document)
        except json.JSONDecodeError as exc:
            raise SchemaError("$", f"not valid JSON (rules): {exc}") from None
    else:
        doc = document
    if not isinstance(doc, dict):
        raise SchemaError("$", "rules document must be an object")
    name = doc.get("name", "unnamed")
    if not isinstance(name, str) or not name:
        raise SchemaError("name", "must be a non-empty string")
    entries = doc.get("rules")
    if not isinstance(entries, list):
        raise SchemaError("rules", "must be an array")

    rules = []
    for i, entry in enumerate(entries):
        path = f"rules[{i}]"
        if not isinstance(entry, dict):
            raise SchemaError(path, "rule entry must be an object")
        rule_id = entry.get("id")
        if not isinstance(rule_id, str) or not rule_id:
            raise SchemaError(f"{path}.id", "must be a non-empty string")
        metric = entry.get("metric")
        if metric not in METRICS:
            raise SchemaError(f"{path}.metric",
                              "must be one of " + ", ".join(METRICS))
        condition = _read_condition(entry, path)
        raw_conclusions = entry.get("conclusions")
        if not isinstance(raw_conclusions, list) or not raw_conclusions:
            raise SchemaError(f"{path}.conclusions", "must be a non-empty array")
        conclusions = []
        for j, c in enumerate(raw_conclusions):
            cpath = f"{path}.conclusions[{j}]"
            if not isinstance(c, dict):
                raise SchemaError(cpath, "conclusion must be an object")
            attribute = c.get("attribute")
            if not isinstance(attribute, str) or not attribute:
                raise SchemaError(f"{cpath}.attribute", "must be a non-empty string")
            level_name = c.get("level")
            if not isinstance(level_name, str):
                raise SchemaError(f"{cpath}.level", "must be a string")
            conclusions.append((attribute, level_from_name(level_name)))
        rules.append(Rule(id=rule_id, metric=metric, condition=condition,
                          conclusions=tuple(conclusions)))
    return build_knowledge_base(name, rules)


def _read_condition(entry: dict, path: str) -> Condition:
    has_range = "range" in entry
    has_values = "values" in entry
    if has_range == has_values:
        raise SchemaError(path, "exactly one of range or values is required")
    if has_range:
        raw = entry["range"]
        if (not isinstance(raw, list) or len(raw) != 2
                or not _is_number(raw[0])
                or not (raw[1] is None or _is_number(raw[1]))):
            raise SchemaError(f"{path}.range",
                              "must be [lo, hi] with hi a number or null")
        return Interval(lo=float(raw[0]),
                        hi=None if raw[1] is None else float(raw[1]))
    raw = entry["values"]
    if (not isinstance(raw, list) or not raw
            or any(not _is_number(v) for v in raw)):
        raise SchemaError(f"{path}.values", "must be a non-empty number array")
    return ValueSet(values=frozenset(float(v) for v in raw))


def _is_number(v) -> bool:
    return isinstance(v, (int, float)) and not isinstance(v, bool)


def rules_to_document(kb: KnowledgeBase) -> dict:
    entries = []
    for rule in kb.rules:
        entry: dict = {"id": rule.id, "metric": rule.metric}
        if isinstance(rule.condition, Interval):
            entry["range"] = [_plain(rule.condition.lo),
                              None if rule.condition.hi is None
                              else _plain(rule.condition.hi)]
        else:
            entry["values"] = [_plain(v) for v in sorted(rule.condition.values)]
        entry["conclusions"] = [
            {"attribute": attribute, "level": LEVEL_NAMES[level]}
            for attribute, level in rule.conclusions
        ]
        entries.append(entry)
    return {"schemaVersion": 1, "name": kb.name, "rules": entries}


def _plain(v: float) -> int | float:
    return int(v) if float(v).is_integer() else v


def serialize_rules(kb: KnowledgeBase) -> str:
    return json.dumps(rules_to_document(kb), indent=2, ensure_ascii=False) + "\n"


def _load_builtin(name: str) -> KnowledgeBase:
    text = (resources.files("ckeval") / "data" / f"{name}_rules.json").read_text("utf-8")
    kb = load_rules(text)
    return KnowledgeBase(name=name, rules=kb.rules)


def default_rule_base() -> KnowledgeBase:
    """The built-in 42-rule base: 7 disjoint bands for each of the 6 metrics."""
    return _load_builtin("default")


def paper_rule_preset() -> KnowledgeBase:
    """The three published example rules, encoded verbatim for fidelity tests."""
    return _load_builtin("paper")


def resolve_rule_base(spec: str) -> KnowledgeBase:
    """Map a CLI-style rules argument (builtin name or path) to a base."""
    if spec == "default":
        return default_rule_base()
    if spec == "paper":
        return paper_rule_preset()
    from .tables import read_text
    return load_rules(read_text(spec))


# --- inference ---------------------------------------------------------------

def forward_chain(facts: list[Fact], kb: KnowledgeBase) -> list[Assessment]:
    """Fire matching rules fact by fact, in input order.

    Returns one Assessment per scope, ordered by first appearance. When two
    fired rules conclude the same attribute, the later fact wins; every
    contributing rule id stays in the fired-rule trace.
    """
    assessments: dict[str, Assessment] = {}
    for fact in facts:
        if fact.value < 0:
            raise RuleError(f"fact {fact.metric}={fact.value} is negative")
        if fact.metric not in METRICS:
            raise RuleError(f"fact has unknown metric {fact.metric!r}")
        scope = assessments.setdefault(fact.scope, Assessment(scope=fact.scope))
        rule = kb.match(fact.metric, fact.value)
        if rule is None:
            continue
        scope.fired_rules.append(rule.id)
        for attribute, level in rule.conclusions:
            scope.derived[attribute] = level
            scope.derived_by[attribute] = rule.id
    return list(assessments.values())


def round_half_up(value: float) -> int:
    return int(Decimal(str(value)).quantize(Decimal("1"), rounding=ROUND_HALF_UP))


def facts_for_record(values: dict[str, float], scope: str) -> list[Fact]:
    return [Fact(metric=m, value=values[m], scope=scope) for m in METRICS]


def evaluate_project(pm: ProjectMetrics, kb: KnowledgeBase,
                     scope: str = "class") -> list[Assessment]:
    """Assess each class, or the project means rounded half-up to integers."""
    if scope == "class":
        facts: list[Fact] = []
        for rec in pm.per_class:
            facts.extend(facts_for_record(
                {m: rec.value(m) for m in METRICS}, rec.class_name))
        return forward_chain(facts, kb)
    if scope == "project":
        rounded = {m: round_half_up(pm.means[m]) for m in METRICS}
        return forward_chain(facts_for_record(rounded, "project"), kb)
    raise UsageError(f"unknown scope {scope!r}; expected class or project")


# --- manual range selection --------------------------------------------------

@dataclass(frozen=True)
class RangeFilter:
    metric: str
    condition: Condition
    in_range: tuple
    out_of_range: tuple


def filter_by_ranges(pm: ProjectMetrics,
                     selection: dict[str, Condition]) -> list[RangeFilter]:
    """Partition classes per selected metric; unselected metrics are ignored."""
    if not selection:
        raise UsageError("at least one metric must be selected")
    results = []
    for metric in METRICS:
        if metric not in selection:
            continue
        condition = selection[metric]
        inside = tuple(r for r in pm.per_class if condition.matches(r.value(metric)))
        outside = tuple(r for r in pm.per_class if not condition.matches(r.value(metric)))
        results.append(RangeFilter(metric=metric, condition=condition,
                                   in_range=inside, out_of_range=outside))
    unknown = set(selection) - set(METRICS)
    if unknown:
        raise UsageError("unknown metric in selection: " + ", ".join(sorted(unknown)))
    return results
