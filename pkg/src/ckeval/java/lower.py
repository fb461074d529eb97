"""Lowering from parsed source units into the class model.

Reference extraction is token-pattern based, not semantic: method bodies
are scanned for local declarations, bare identifiers, ``recv.member`` and
``recv.member(...)`` chains, ``this.member`` and ``new Type(...)``.
Receiver names resolve in order: local variable types, own field types,
same-package classes, imported classes, then the unresolved marker.

Static members couple like instance members; uses of a class's own static
fields stay out of the cohesion sets. Field initializers are not scanned.
"""

from dataclasses import dataclass

from ..model import CallRef, ClassInfo, ClassModel, FieldInfo, MethodInfo, build_model
from .lexer import PRIMITIVES, Token
from .parser import ClassDecl, MethodDecl, SourceUnit, TypeRef


@dataclass(frozen=True)
class _Env:
    """Name resolution context for one source unit."""

    package: str
    imports: dict[str, str]              # simple name -> qualified name
    package_classes: dict[str, str]      # simple name -> qualified (same package)

    def resolve_type(self, written: str) -> str:
        if "." in written:
            return written
        if written in self.package_classes:
            return self.package_classes[written]
        if written in self.imports:
            return self.imports[written]
        return written


def qualified_name(package: str, simple: str) -> str:
    return f"{package}.{simple}" if package else simple


def lower_to_model(units: list[SourceUnit], project_name: str = "") -> ClassModel:
    """Join parsed units into one validated ClassModel."""
    package_index: dict[str, dict[str, str]] = {}
    for unit in units:
        bucket = package_index.setdefault(unit.package_name, {})
        for decl in unit.classes:
            bucket[decl.name] = qualified_name(unit.package_name, decl.name)

    classes: list[ClassInfo] = []
    for unit in units:
        env = _Env(
            package=unit.package_name,
            imports={q.rsplit(".", 1)[-1]: q
                     for q, on_demand in unit.imports if not on_demand},
            package_classes=package_index.get(unit.package_name, {}),
        )
        for decl in unit.classes:
            classes.append(_lower_class(decl, env))
    return build_model(project_name, classes)


def _lower_class(decl: ClassDecl, env: _Env) -> ClassInfo:
    own_name = qualified_name(env.package, decl.name)

    if decl.kind == "interface":
        # interfaces carry abstract methods only; their extends list is
        # interface inheritance, which stays off the class tree
        interfaces = tuple(sorted(env.resolve_type(n)
                                  for n in decl.extends + decl.implements))
        methods = tuple(_lower_method(m, own_name, decl, env) for m in decl.methods)
        return ClassInfo(qualified_name=own_name, superclass=None,
                         interfaces=interfaces, fields=(), methods=methods)

    superclass = env.resolve_type(decl.extends[0]) if decl.extends else None
    interfaces = tuple(sorted(env.resolve_type(n) for n in decl.implements))
    fields = tuple(
        FieldInfo(name=f.name,
                  declared_type=None if f.type.is_primitive
                  else env.resolve_type(f.type.text))
        for f in decl.fields
    )
    methods = tuple(_lower_method(m, own_name, decl, env) for m in decl.methods)
    return ClassInfo(qualified_name=own_name, superclass=superclass,
                     interfaces=interfaces, fields=fields, methods=methods)


def _lower_method(method: MethodDecl, own_name: str, decl: ClassDecl,
                  env: _Env) -> MethodInfo:
    if method.body is None:
        return MethodInfo(name=method.name, arity=method.arity)
    extractor = _Extractor(method, own_name, decl, env)
    extractor.run()
    return MethodInfo(
        name=method.name,
        arity=method.arity,
        used_fields=frozenset(extractor.used_fields),
        called_methods=frozenset(extractor.calls),
        referenced_classes=frozenset(extractor.referenced),
    )


class _Extractor:
    def __init__(self, method: MethodDecl, own_name: str, decl: ClassDecl,
                 env: _Env):
        self.tokens: tuple[Token, ...] = method.body or ()
        self.own_name = own_name
        self.env = env
        self.instance_fields = {f.name for f in decl.fields if not f.is_static}
        self.field_types = {f.name: f.type for f in decl.fields}
        self.locals: dict[str, TypeRef] = {name: t for t, name in method.params}
        self.used_fields: set[str] = set()
        self.calls: set[CallRef] = set()
        self.referenced: set[str] = set()

    # --- scanning ---

    def run(self) -> None:
        i = 0
        n = len(self.tokens)
        while i < n:
            tok = self.tokens[i]
            if tok.kind == "keyword":
                if tok.text == "this":
                    i = self.this_chain(i)
                elif tok.text == "new":
                    i = self.new_expression(i)
                elif tok.text in PRIMITIVES:
                    i = self.try_declaration(i)
                else:
                    i += 1
            elif tok.kind == "ident" and not self.prev_is_dot(i):
                declared = self.try_declaration(i)
                i = declared if declared != i else self.chain(i)
            else:
                i += 1

    def prev_is_dot(self, i: int) -> bool:
        prev = self.tokens[i - 1] if i > 0 else None
        return prev is not None and prev.kind == "punct" and prev.text == "."

    def tok_is(self, i: int, kind: str, text: str | None = None) -> bool:
        if i >= len(self.tokens):
            return False
        tok = self.tokens[i]
        return tok.kind == kind and (text is None or tok.text == text)

    def collect_chain(self, i: int) -> tuple[list[str], int]:
        """Idents joined by dots starting at i; returns (parts, next index)."""
        parts = [self.tokens[i].text]
        i += 1
        while self.tok_is(i, "punct", ".") and self.tok_is(i + 1, "ident"):
            parts.append(self.tokens[i + 1].text)
            i += 2
        return parts, i

    def arity_at(self, i: int) -> int:
        """Argument count for the '(' at index i; i stays unconsumed."""
        depth = 0
        commas = 0
        saw_tokens = False
        j = i
        while j < len(self.tokens):
            tok = self.tokens[j]
            if tok.kind == "punct" and tok.text in "([{":
                depth += 1
            elif tok.kind == "punct" and tok.text in ")]}":
                depth -= 1
                if depth == 0:
                    break
            elif depth == 1:
                saw_tokens = True
                if tok.kind == "punct" and tok.text == ",":
                    commas += 1
            j += 1
        if not saw_tokens:
            return 0
        return commas + 1

    # --- patterns ---

    def try_declaration(self, i: int) -> int:
        """Recognize ``Type name`` followed by '=', ';', ',', ':' or ')'.

        Returns the index after the variable name on success, i otherwise.
        """
        tok = self.tokens[i]
        if tok.kind == "keyword" and tok.text in PRIMITIVES:
            type_ref = TypeRef(tok.text, True)
            j = i + 1
        elif tok.kind == "ident":
            parts, j = self.collect_chain(i)
            type_ref = TypeRef(".".join(parts), False)
        else:
            return i + 1 if tok.kind == "keyword" else i
        while self.tok_is(j, "punct", "[") and self.tok_is(j + 1, "punct", "]"):
            j += 2
        if not self.tok_is(j, "ident"):
            return i if tok.kind == "ident" else i + 1
        name = self.tokens[j].text
        after = self.tokens[j + 1] if j + 1 < len(self.tokens) else None
        if after is not None and after.kind == "punct" and after.text in "=;,:)":
            self.locals[name] = type_ref
            return j + 1
        return i if tok.kind == "ident" else i + 1

    def this_chain(self, i: int) -> int:
        if not (self.tok_is(i + 1, "punct", ".") and self.tok_is(i + 2, "ident")):
            return i + 1
        member = self.tokens[i + 2].text
        if self.tok_is(i + 3, "punct", "("):
            self.calls.add(CallRef(self.own_name, member, self.arity_at(i + 3)))
            return i + 4
        if member in self.instance_fields:
            self.used_fields.add(member)
        return i + 3

    def new_expression(self, i: int) -> int:
        if not self.tok_is(i + 1, "ident"):
            return i + 1
        parts, j = self.collect_chain(i + 1)
        if self.tok_is(j, "punct", "("):
            resolved = self.env.resolve_type(".".join(parts))
            self.calls.add(CallRef(resolved, parts[-1], self.arity_at(j)))
            if resolved != self.own_name:
                self.referenced.add(resolved)
            return j + 1
        return j  # array allocation or similar: nothing to record

    def chain(self, i: int) -> int:
        parts, j = self.collect_chain(i)
        is_call = self.tok_is(j, "punct", "(")

        if len(parts) == 1:
            name = parts[0]
            if is_call:
                self.calls.add(CallRef(self.own_name, name, self.arity_at(j)))
                return j + 1
            if name not in self.locals and name in self.instance_fields:
                self.used_fields.add(name)
            return j

        receiver = parts[0]
        target = self.resolve_receiver(receiver)
        if receiver not in self.locals and receiver in self.instance_fields:
            self.used_fields.add(receiver)
        if target is not None and target != self.own_name:
            self.referenced.add(target)
        if is_call:
            method = parts[-1]
            # chains deeper than recv.member lose the receiver type
            call_target = target if len(parts) == 2 else None
            self.calls.add(CallRef(call_target, method, self.arity_at(j)))
            return j + 1
        return j

    def resolve_receiver(self, name: str) -> str | None:
        local = self.locals.get(name)
        if local is not None:
            return None if local.is_primitive else self.env.resolve_type(local.text)
        field_type = self.field_types.get(name)
        if field_type is not None:
            return None if field_type.is_primitive \
                else self.env.resolve_type(field_type.text)
        if name in self.env.package_classes:
            return self.env.package_classes[name]
        if name in self.env.imports:
            return self.env.imports[name]
        return None
