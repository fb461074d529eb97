"""The six Chidamber & Kemerer class metrics.

WMC   weighted methods per class (unit complexity: method count)
DIT   depth of inheritance tree (extends edges up to the model boundary)
NOC   number of children (direct subclasses)
CBO   coupling between object classes (uses or used-by, inheritance excluded)
RFC   response for a class (own methods plus distinct called methods)
LCOM  lack of cohesion in methods (disjoint pairs minus sharing pairs, >= 0)

All functions are pure; per-class results are independent of each other.
"""

from dataclasses import dataclass
from typing import Callable

from .model import ClassInfo, ClassModel, MethodInfo

METRICS = ("WMC", "DIT", "NOC", "CBO", "RFC", "LCOM")


@dataclass(frozen=True)
class MetricRecord:
    class_name: str
    wmc: int
    dit: int
    noc: int
    cbo: int
    rfc: int
    lcom: int

    def value(self, metric: str) -> int:
        return getattr(self, metric.lower())

    def values(self) -> tuple[int, int, int, int, int, int]:
        return (self.wmc, self.dit, self.noc, self.cbo, self.rfc, self.lcom)


@dataclass(frozen=True)
class ProjectMetrics:
    project_name: str
    per_class: tuple[MetricRecord, ...]
    means: dict[str, float]

    def record(self, class_name: str) -> MetricRecord | None:
        for rec in self.per_class:
            if rec.class_name == class_name:
                return rec
        return None


def wmc(cls: ClassInfo, complexity: Callable[[MethodInfo], int] | None = None) -> int:
    """Sum of per-method complexities; defaults to 1 per method."""
    if complexity is None:
        return len(cls.methods)
    return sum(complexity(m) for m in cls.methods)


def dit(cls: ClassInfo, model: ClassModel) -> int:
    """Extends edges from the class up to the model boundary.

    External stubs contribute no depth: a class whose superclass chain
    immediately leaves the model has depth 0.
    """
    depth = 0
    for name in model.ancestors(cls.qualified_name):
        parent = model.get(name)
        if parent is None or parent.is_external:
            break
        depth += 1
    return depth


def noc(cls: ClassInfo, model: ClassModel) -> int:
    """Direct subclasses only; stubs carry no extends edges."""
    return sum(1 for other in model.classes
               if other.superclass == cls.qualified_name)


def _uses(cls: ClassInfo) -> set[str]:
    """Classes whose methods or fields this class's methods touch."""
    out: set[str] = set()
    for m in cls.methods:
        out.update(ref for ref in m.referenced_classes)
        out.update(c.class_name for c in m.called_methods if c.class_name is not None)
    out.discard(cls.qualified_name)
    return out


def _related(model: ClassModel, a: str, b: str) -> bool:
    return a in model.ancestors(b) or b in model.ancestors(a)


def cbo(cls: ClassInfo, model: ClassModel) -> int:
    """Distinct other classes coupled by use in either direction.

    Counts classes, not references. Pairs related by inheritance are
    excluded, as are external stubs and unresolved targets.
    """
    own_uses = _uses(cls)
    partners: set[str] = set()
    for other in model.internal_classes():
        name = other.qualified_name
        if name == cls.qualified_name or _related(model, cls.qualified_name, name):
            continue
        if name in own_uses or cls.qualified_name in _uses(other):
            partners.add(name)
    return len(partners)


def rfc(cls: ClassInfo) -> int:
    """Size of the response set: own methods united with called methods.

    Identity is (target class or unresolved, name, arity); one call level.
    """
    response: set[tuple[str | None, str, int | None]] = set()
    for m in cls.methods:
        response.add((cls.qualified_name, m.name, m.arity))
    for m in cls.methods:
        for call in m.called_methods:
            response.add((call.class_name, call.method, call.arity))
    return len(response)


def lcom(cls: ClassInfo) -> int:
    """Method pairs with disjoint field sets minus pairs that share, floored at 0.

    A method that touches no instance field carries the empty set, which is
    disjoint with every other set.
    """
    sets = [m.used_fields for m in cls.methods]
    p = q = 0
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if sets[i] & sets[j]:
                q += 1
            else:
                p += 1
    return max(p - q, 0)


def compute_record(cls: ClassInfo, model: ClassModel) -> MetricRecord:
    return MetricRecord(
        class_name=cls.qualified_name,
        wmc=wmc(cls),
        dit=dit(cls, model),
        noc=noc(cls, model),
        cbo=cbo(cls, model),
        rfc=rfc(cls),
        lcom=lcom(cls),
    )


def project_means(records: list[MetricRecord] | tuple[MetricRecord, ...]) -> dict[str, float]:
    """Per-class arithmetic means; an empty record set means all zeros."""
    if not records:
        return {m: 0.0 for m in METRICS}
    n = len(records)
    return {m: sum(rec.value(m) for rec in records) / n for m in METRICS}


def compute_all(model: ClassModel) -> ProjectMetrics:
    """One record per non-external class, ordered by qualified name."""
    records = tuple(sorted((compute_record(c, model) for c in model.internal_classes()),
                           key=lambda rec: rec.class_name))
    return ProjectMetrics(project_name=model.project_name,
                          per_class=records,
                          means=project_means(records))
