import random
from itertools import combinations

from hypothesis import given, settings, strategies as st

from ckeval.metrics import (
    METRICS,
    cbo,
    compute_all,
    dit,
    lcom,
    noc,
    rfc,
    wmc,
)
from ckeval.model import (
    CallRef,
    ClassInfo,
    ClassModel,
    FieldInfo,
    MethodInfo,
    build_model,
)
from ckeval.tables import metrics_from_csv, metrics_from_document, metrics_to_csv, metrics_to_document
from conftest import random_class, random_model


# --- independent oracles ------------------------------------------------------

def lcom_oracle(cls: ClassInfo) -> int:
    """Brute force over all unordered method pairs."""
    sets = [m.used_fields for m in cls.methods]
    p = sum(1 for a, b in combinations(sets, 2) if not (a & b))
    q = sum(1 for a, b in combinations(sets, 2) if a & b)
    return max(p - q, 0)


def rfc_oracle(cls: ClassInfo) -> int:
    response = {(cls.qualified_name, m.name, m.arity) for m in cls.methods}
    response |= {(c.class_name, c.method, c.arity)
                 for m in cls.methods for c in m.called_methods}
    return len(response)


def dit_oracle(cls: ClassInfo, model: ClassModel) -> int:
    parent_name = cls.superclass
    if parent_name is None:
        return 0
    parent = model.get(parent_name)
    if parent is None or parent.is_external:
        return 0
    return 1 + dit_oracle(parent, model)


def uses_oracle(cls: ClassInfo) -> set[str]:
    out: set[str] = set()
    for m in cls.methods:
        out |= set(m.referenced_classes)
        out |= {c.class_name for c in m.called_methods if c.class_name}
    out.discard(cls.qualified_name)
    return out


def related_oracle(model: ClassModel, a: str, b: str) -> bool:
    def ancestors(name: str) -> set[str]:
        out = set()
        node = model.get(name)
        while node is not None and node.superclass is not None:
            if node.superclass in out:
                break
            out.add(node.superclass)
            node = model.get(node.superclass)
        return out
    return a in ancestors(b) or b in ancestors(a)


def cbo_oracle(cls: ClassInfo, model: ClassModel) -> int:
    count = 0
    for other in model.classes:
        name = other.qualified_name
        if other.is_external or name == cls.qualified_name:
            continue
        if related_oracle(model, cls.qualified_name, name):
            continue
        if name in uses_oracle(cls) or cls.qualified_name in uses_oracle(other):
            count += 1
    return count


# --- example-driven unit tests ------------------------------------------------

def cls_of(methods=(), fields=(), name="p.C", superclass=None, external=False):
    return ClassInfo(qualified_name=name, superclass=superclass,
                     fields=tuple(fields), methods=tuple(methods),
                     is_external=external)


def method(name, arity=0, used=(), calls=(), refs=()):
    return MethodInfo(name=name, arity=arity, used_fields=frozenset(used),
                      called_methods=frozenset(calls),
                      referenced_classes=frozenset(refs))


def test_wmc_counts_methods():
    assert wmc(cls_of()) == 0
    assert wmc(cls_of([method(f"m{i}") for i in range(4)])) == 4


def test_wmc_counts_constructors():
    # three plain methods plus a constructor named like the class
    methods = [method("C", 2)] + [method(f"m{i}") for i in range(3)]
    assert wmc(cls_of(methods)) == 4


def test_wmc_pluggable_complexity():
    cls = cls_of([method("a"), method("b")])
    assert wmc(cls, complexity=lambda m: 3) == 6


def test_dit_root_is_zero():
    model = build_model("t", [ClassInfo("A")])
    assert dit(model.get("A"), model) == 0


def test_dit_chain():
    model = build_model("t", [
        ClassInfo("A"),
        ClassInfo("B", superclass="A"),
        ClassInfo("C", superclass="B"),
    ])
    assert dit(model.get("C"), model) == 2
    assert dit(model.get("B"), model) == 1


def test_dit_stops_at_external_boundary():
    model = build_model("t", [ClassInfo("A", superclass="lib.Base")])
    assert dit(model.get("A"), model) == 0


def test_noc_direct_children_only():
    model = build_model("t", [
        ClassInfo("R"),
        ClassInfo("A", superclass="R"),
        ClassInfo("B", superclass="R"),
        ClassInfo("C", superclass="R"),
        ClassInfo("D", superclass="A"),  # grandchild of R
    ])
    assert noc(model.get("R"), model) == 3
    assert noc(model.get("D"), model) == 0


def test_noc_stubs_carry_no_extends_edges():
    model = build_model("t", [ClassInfo("A", superclass="ext.B")])
    assert noc(model.get("A"), model) == 0
    assert model.get("ext.B").superclass is None


def test_cbo_isolated_class():
    model = build_model("t", [ClassInfo("A")])
    assert cbo(model.get("A"), model) == 0


def test_cbo_counts_classes_not_references():
    # A calls B.f and B reads A.x: one partner each, however many references
    model = build_model("t", [
        cls_of([method("m", calls=[CallRef("B", "f", 0)], refs=["B"])], name="A"),
        cls_of([method("g", refs=["A"])], name="B"),
    ])
    assert cbo(model.get("A"), model) == 1
    assert cbo(model.get("B"), model) == 1


def test_cbo_excludes_inheritance():
    model = build_model("t", [
        cls_of([method("f")], name="A"),
        cls_of([method("g", calls=[CallRef("A", "f", 0)], refs=["A"])],
               name="B", superclass="A"),
    ])
    assert cbo(model.get("B"), model) == 0
    assert cbo(model.get("A"), model) == 0


def test_cbo_excludes_externals_and_unresolved():
    model = build_model("t", [
        cls_of([method("m", calls=[CallRef("ext.E", "f", 0), CallRef(None, "g", 0)],
                       refs=["ext.E"])], name="A"),
        ClassInfo("ext.E", is_external=True),
    ])
    assert cbo(model.get("A"), model) == 0


def test_rfc_own_methods_only():
    assert rfc(cls_of([method("a"), method("b")])) == 2


def test_rfc_set_union_dedup():
    # both methods call the same external method: 2 own + 1 distinct = 3
    call = CallRef("X", "m", 0)
    cls = cls_of([method("a", calls=[call]), method("b", calls=[call])])
    assert rfc(cls) == 3
    assert rfc_oracle(cls) == 3


def test_rfc_four_own_five_called():
    calls = [CallRef("D1", "x", 0), CallRef("D2", "x", 0), CallRef("D3", "x", 0),
             CallRef("D1", "y", 0), CallRef("D2", "y", 0)]
    cls = cls_of([
        method("m1", used=["a"], calls=calls),
        method("m2", used=["a"]),
        method("m3", used=["b"]),
        method("m4"),
    ], fields=[FieldInfo("a"), FieldInfo("b")])
    assert rfc(cls) == 9
    assert rfc_oracle(cls) == 9


def test_rfc_self_call_not_double_counted():
    cls = cls_of([method("f", calls=[CallRef("p.C", "g", 0)]), method("g")])
    assert rfc(cls) == 2


def test_lcom_no_pairs():
    assert lcom(cls_of()) == 0
    assert lcom(cls_of([method("m", used=["a"])], fields=[FieldInfo("a")])) == 0


def test_lcom_enumerated_examples():
    fields = [FieldInfo("a"), FieldInfo("b"), FieldInfo("c")]
    shared = cls_of([method("m1", used=["a"]), method("m2", used=["a"]),
                     method("m3", used=["b"])], fields=fields)
    assert lcom(shared) == 1  # P=2, Q=1
    disjoint = cls_of([method("m1", used=["a"]), method("m2", used=["b"]),
                       method("m3", used=["c"])], fields=fields)
    assert lcom(disjoint) == 3  # P=3, Q=0


def test_fixture_shaped_class_matches_published_first_row():
    # a class shaped to yield (4,1,0,6,9,4): WMC 4, DIT 1, NOC 0, CBO 6,
    # RFC 9, LCOM 4
    calls = [CallRef("D1", "x", 0), CallRef("D2", "x", 0), CallRef("D3", "x", 0),
             CallRef("D1", "y", 0), CallRef("D2", "y", 0)]
    fixture = cls_of([
        method("m1", used=["a"], calls=calls, refs=["D1", "D2", "D3"]),
        method("m2", used=["a"]),
        method("m3", used=["b"]),
        method("m4"),
    ], fields=[FieldInfo("a"), FieldInfo("b")], name="C", superclass="P")
    others = [ClassInfo("P")]
    others += [ClassInfo(f"D{i}") for i in (1, 2, 3)]
    others += [cls_of([method("u", calls=[CallRef("C", "m2", 0)], refs=["C"])],
                      name=f"D{i}") for i in (4, 5, 6)]
    model = build_model("t", [fixture] + others)
    record = compute_all(model).record("C")
    assert record.values() == (4, 1, 0, 6, 9, 4)


def test_compute_all_empty_model():
    pm = compute_all(build_model("empty", []))
    assert pm.per_class == ()
    assert all(pm.means[m] == 0 for m in METRICS)


def test_compute_all_single_record_means():
    pm = metrics_from_csv("CLASS,WMC,DIT,NOC,CBO,RFC,LCOM\nC,4,1,0,6,9,4\n")
    assert [pm.means[m] for m in METRICS] == [4.0, 1.0, 0.0, 6.0, 9.0, 4.0]


def test_compute_all_mean_is_arithmetic():
    model = build_model("t", [
        cls_of([method("a"), method("b")], name="A"),
        cls_of([method(f"m{i}") for i in range(4)], name="B"),
    ])
    assert compute_all(model).means["WMC"] == 3.0


def test_compute_all_excludes_externals_and_sorts():
    model = build_model("t", [
        ClassInfo("b.Z"),
        ClassInfo("a.Y", superclass="ext.Lib"),
        ClassInfo("ext.Lib", is_external=True),
    ])
    pm = compute_all(model)
    assert [r.class_name for r in pm.per_class] == ["a.Y", "b.Z"]


# --- invariants over random models --------------------------------------------

def test_rfc_at_least_wmc():
    rng = random.Random(11)
    for _ in range(200):
        model = random_model(rng)
        for cls in model.internal_classes():
            assert rfc(cls) >= wmc(cls)


def test_dit_parent_child_step():
    rng = random.Random(12)
    for _ in range(200):
        model = random_model(rng)
        for cls in model.classes:
            if cls.superclass is None:
                continue
            parent = model.get(cls.superclass)
            if parent is not None and not parent.is_external:
                assert dit(cls, model) == dit(parent, model) + 1


def test_noc_sums_to_extends_edges():
    rng = random.Random(13)
    for _ in range(200):
        model = random_model(rng)
        pm = compute_all(model)
        edges = sum(1 for c in model.classes
                    if c.superclass is not None
                    and (p := model.get(c.superclass)) is not None
                    and not p.is_external)
        assert sum(r.noc for r in pm.per_class) == edges


def test_lcom_matches_oracle_random():
    rng = random.Random(14)
    for _ in range(300):
        cls = random_class(rng)
        assert lcom(cls) == lcom_oracle(cls)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.frozensets(st.sampled_from("abcdef"), max_size=6), max_size=8))
def test_lcom_matches_oracle_hypothesis(field_sets):
    fields = [FieldInfo(ch) for ch in "abcdef"]
    methods = [method(f"m{i}", used=s) for i, s in enumerate(field_sets)]
    cls = cls_of(methods, fields=fields)
    assert lcom(cls) == lcom_oracle(cls)


def test_cbo_matches_oracle_random():
    rng = random.Random(15)
    for _ in range(120):
        model = random_model(rng)
        for cls in model.internal_classes():
            assert cbo(cls, model) == cbo_oracle(cls, model)


def test_dit_matches_oracle_random():
    rng = random.Random(16)
    for _ in range(120):
        model = random_model(rng)
        for cls in model.internal_classes():
            assert dit(cls, model) == dit_oracle(cls, model)


def test_cbo_symmetric_contribution():
    rng = random.Random(17)
    for _ in range(200):
        model = random_model(rng)
        internal = model.internal_classes()
        for a in internal:
            for b in internal:
                if a.qualified_name >= b.qualified_name:
                    continue
                if related_oracle(model, a.qualified_name, b.qualified_name):
                    continue
                crossed = (b.qualified_name in uses_oracle(a)
                           or a.qualified_name in uses_oracle(b))
                if crossed:
                    assert cbo(a, model) >= 1
                    assert cbo(b, model) >= 1


def rename_everywhere(model: ClassModel, mapping: dict[str, str]) -> ClassModel:
    def ren(name):
        return mapping.get(name, name) if name is not None else None

    classes = []
    for cls in model.classes:
        methods = tuple(
            MethodInfo(
                name=m.name, arity=m.arity, used_fields=m.used_fields,
                called_methods=frozenset(
                    CallRef(ren(c.class_name), c.method, c.arity)
                    for c in m.called_methods),
                referenced_classes=frozenset(ren(r) for r in m.referenced_classes),
            ) for m in cls.methods)
        fields = tuple(FieldInfo(f.name, ren(f.declared_type)) for f in cls.fields)
        classes.append(ClassInfo(
            qualified_name=ren(cls.qualified_name),
            superclass=ren(cls.superclass),
            interfaces=tuple(ren(i) for i in cls.interfaces),
            fields=fields, methods=methods, is_external=cls.is_external))
    return build_model(model.project_name, classes)


def test_consistent_rename_leaves_metrics_unchanged():
    rng = random.Random(18)
    for _ in range(60):
        model = random_model(rng)
        mapping = {c.qualified_name: f"z.R{i}"
                   for i, c in enumerate(model.classes)}
        renamed = rename_everywhere(model, mapping)
        before = {c.qualified_name: compute_all(model).record(c.qualified_name)
                  for c in model.internal_classes()}
        after = compute_all(renamed)
        for old_name, record in before.items():
            new = after.record(mapping[old_name])
            assert new.values() == record.values()


def test_metric_order_independence_of_computation():
    rng = random.Random(19)
    model = random_model(rng)
    first = compute_all(model)
    second = compute_all(model)
    assert first == second


# --- table round-trips ---------------------------------------------------------

def test_csv_roundtrip(corpus_model):
    pm = compute_all(corpus_model)
    text = metrics_to_csv(pm)
    again = metrics_from_csv(text, project_name=pm.project_name)
    assert again.per_class == pm.per_class
    assert again.means == pm.means


def test_document_roundtrip(corpus_model):
    pm = compute_all(corpus_model)
    doc = metrics_to_document(pm)
    again = metrics_from_document(doc)
    assert again.per_class == pm.per_class
    assert again.project_name == pm.project_name
