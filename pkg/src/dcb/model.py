"""Finalized class models and their XML / PlantUML serializations.

A finalized model is an immutable snapshot of the surviving candidates:
classes with nested attributes, plus association, aggregation, and
generalization relationships. Names are rendered in UpperCamelCase for
classes and kept as lowercase lemmas for attributes and labels. Every
element carries provenance tags of the form ``RULE:s<index>`` recording
which rule fired on which sentence.

The XML dialect is deliberately small::

    <?xml version="1.0" encoding="UTF-8"?>
    <classModel version="1.0" source="library" mode="lenient">
      <class name="Member" provenance="R1:s0">
        <attribute name="address" provenance="R9:s1"/>
      </class>
      <relationship kind="association" source="Library" target="Book"
                    label="lend" provenance="R10:s0"/>
    </classModel>

``from_xml`` validates strictly: unknown elements or attributes, missing
names, duplicate classes, relationships with unknown endpoints, and
malformed XML all raise typed errors.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass, field
from xml.sax.saxutils import quoteattr

from .errors import DcbError
from .rules import (
    AGGREGATION,
    ASSOCIATION,
    GENERALIZATION,
    STATUS_REJECTED,
    CandidateModel,
    display_name,
)

RELATIONSHIP_KINDS = frozenset({ASSOCIATION, AGGREGATION, GENERALIZATION})

SCHEMA_VERSION = "1.0"


class XmlSyntaxError(DcbError):
    """Raised when a model document is not well-formed XML."""

    def __init__(self, message: str, position: tuple[int, int] | None = None):
        super().__init__(message)
        self.position = position


class SchemaViolationError(DcbError):
    """Raised when well-formed XML does not follow the model schema."""

    def __init__(self, message: str, element: str = ""):
        super().__init__(message)
        self.element = element


class DanglingEndpointError(SchemaViolationError):
    """Raised when a relationship references a class that is not declared."""

    def __init__(self, message: str, name: str = ""):
        super().__init__(message, element="relationship")
        self.name = name


@dataclass(frozen=True)
class UmlAttribute:
    name: str
    provenance: tuple[str, ...] = ()


@dataclass(frozen=True)
class UmlClass:
    name: str
    attributes: tuple[UmlAttribute, ...] = ()
    provenance: tuple[str, ...] = ()


@dataclass(frozen=True)
class UmlRelationship:
    kind: str
    source: str
    target: str
    label: str = ""
    provenance: tuple[str, ...] = ()


@dataclass(frozen=True)
class ModelMeta:
    source: str = ""
    mode: str = ""
    generator: str = ""


@dataclass(frozen=True)
class ClassModel:
    classes: tuple[UmlClass, ...] = ()
    relationships: tuple[UmlRelationship, ...] = ()
    meta: ModelMeta = field(default_factory=ModelMeta)

    def class_names(self) -> frozenset[str]:
        return frozenset(c.name for c in self.classes)


def finalize(candidate: CandidateModel, *, source: str = "", mode: str = "", generator: str = "") -> ClassModel:
    """Freeze a candidate model into a serializable class model.

    Rejected classes are dropped along with their attributes and any
    relationship touching them; attributes whose owner never became a
    class are discarded. Output order is deterministic: elements sort by
    first-mention sentence, then by name.
    """
    kept = [c for c in candidate.classes if c.status != STATUS_REJECTED]
    kept_names = {c.name for c in kept}

    attrs_by_owner: dict[str, list] = {}
    for attr in candidate.attributes:
        if attr.owner in kept_names:
            attrs_by_owner.setdefault(attr.owner, []).append(attr)

    classes = []
    for cand in sorted(kept, key=lambda c: (_first_sentence(c.provenance), c.name)):
        own = sorted(
            attrs_by_owner.get(cand.name, ()),
            key=lambda a: (_first_sentence(a.provenance), a.name),
        )
        classes.append(
            UmlClass(
                name=display_name(cand.name),
                attributes=tuple(
                    UmlAttribute(a.name, provenance=_tags(a.provenance)) for a in own
                ),
                provenance=_tags(cand.provenance),
            )
        )

    relationships = []
    for assoc in candidate.associations:
        if assoc.source not in kept_names or assoc.target not in kept_names:
            continue
        relationships.append(
            UmlRelationship(
                kind=assoc.kind,
                source=display_name(assoc.source),
                target=display_name(assoc.target),
                label="" if assoc.kind == GENERALIZATION else assoc.label,
                provenance=_tags(assoc.provenance),
            )
        )
    relationships.sort(
        key=lambda r: (_tag_sentence(r.provenance), r.kind, r.source, r.target, r.label)
    )

    return ClassModel(
        classes=tuple(classes),
        relationships=tuple(relationships),
        meta=ModelMeta(source=source, mode=mode, generator=generator),
    )


def _first_sentence(provenance) -> int:
    return min((p.sentence_index for p in provenance), default=0)


def _tags(provenance) -> tuple[str, ...]:
    return tuple(p.tag() for p in provenance)


def _tag_sentence(tags: tuple[str, ...]) -> int:
    indices = []
    for tag in tags:
        _, _, idx = tag.partition(":s")
        if idx.isdigit():
            indices.append(int(idx))
    return min(indices, default=0)


def to_xml(model: ClassModel) -> str:
    """Serialize a model to the XML dialect (2-space indent, UTF-8 header)."""
    lines = ['<?xml version="1.0" encoding="UTF-8"?>']
    root_attrs = [("version", SCHEMA_VERSION)]
    for key, value in (("source", model.meta.source), ("mode", model.meta.mode), ("generator", model.meta.generator)):
        if value:
            root_attrs.append((key, value))
    if not model.classes and not model.relationships:
        lines.append(f"<classModel {_fmt_attrs(root_attrs)}/>")
        return "\n".join(lines) + "\n"
    lines.append(f"<classModel {_fmt_attrs(root_attrs)}>")
    for cls in model.classes:
        cls_attrs = [("name", cls.name)] + _prov_attr(cls.provenance)
        if cls.attributes:
            lines.append(f"  <class {_fmt_attrs(cls_attrs)}>")
            for attr in cls.attributes:
                a = [("name", attr.name)] + _prov_attr(attr.provenance)
                lines.append(f"    <attribute {_fmt_attrs(a)}/>")
            lines.append("  </class>")
        else:
            lines.append(f"  <class {_fmt_attrs(cls_attrs)}/>")
    for rel in model.relationships:
        r = [("kind", rel.kind), ("source", rel.source), ("target", rel.target)]
        if rel.label:
            r.append(("label", rel.label))
        r.extend(_prov_attr(rel.provenance))
        lines.append(f"  <relationship {_fmt_attrs(r)}/>")
    lines.append("</classModel>")
    return "\n".join(lines) + "\n"


def _fmt_attrs(pairs: list[tuple[str, str]]) -> str:
    return " ".join(f"{key}={quoteattr(value)}" for key, value in pairs)


def _prov_attr(tags: tuple[str, ...]) -> list[tuple[str, str]]:
    if not tags:
        return []
    return [("provenance", ",".join(tags))]


_CLASS_ATTRS = {"name", "provenance"}
_ATTRIBUTE_ATTRS = {"name", "provenance"}
_RELATIONSHIP_ATTRS = {"kind", "source", "target", "label", "provenance"}
_ROOT_ATTRS = {"version", "source", "mode", "generator"}


def from_xml(text: str) -> ClassModel:
    """Parse and strictly validate a model document."""
    try:
        root = ET.fromstring(text)
    except ET.ParseError as exc:
        raise XmlSyntaxError(f"not well-formed XML: {exc}", position=exc.position) from exc

    if root.tag != "classModel":
        raise SchemaViolationError(f"root element must be classModel, got {root.tag!r}", element=root.tag)
    _check_attrs(root, _ROOT_ATTRS)
    version = root.get("version")
    if version != SCHEMA_VERSION:
        raise SchemaViolationError(f"unsupported model version {version!r}", element="classModel")
    _reject_text(root)

    classes: list[UmlClass] = []
    relationships: list[UmlRelationship] = []
    seen_classes: set[str] = set()
    for child in root:
        if child.tag == "class":
            _check_attrs(child, _CLASS_ATTRS)
            _reject_text(child)
            name = child.get("name")
            if not name:
                raise SchemaViolationError("class element without a name", element="class")
            if name in seen_classes:
                raise SchemaViolationError(f"duplicate class {name!r}", element="class")
            seen_classes.add(name)
            attrs: list[UmlAttribute] = []
            seen_attrs: set[str] = set()
            for sub in child:
                if sub.tag != "attribute":
                    raise SchemaViolationError(f"unexpected element {sub.tag!r} inside class", element=sub.tag)
                _check_attrs(sub, _ATTRIBUTE_ATTRS)
                _reject_text(sub)
                if len(sub):
                    raise SchemaViolationError("attribute element must be empty", element="attribute")
                a_name = sub.get("name")
                if not a_name:
                    raise SchemaViolationError("attribute element without a name", element="attribute")
                if a_name in seen_attrs:
                    raise SchemaViolationError(
                        f"duplicate attribute {a_name!r} in class {name!r}", element="attribute"
                    )
                seen_attrs.add(a_name)
                attrs.append(UmlAttribute(a_name, provenance=_split_prov(sub.get("provenance", ""))))
            classes.append(
                UmlClass(name, attributes=tuple(attrs), provenance=_split_prov(child.get("provenance", "")))
            )
        elif child.tag == "relationship":
            _check_attrs(child, _RELATIONSHIP_ATTRS)
            _reject_text(child)
            if len(child):
                raise SchemaViolationError("relationship element must be empty", element="relationship")
            kind = child.get("kind")
            if kind not in RELATIONSHIP_KINDS:
                raise SchemaViolationError(f"unknown relationship kind {kind!r}", element="relationship")
            source, target = child.get("source"), child.get("target")
            if not source or not target:
                raise SchemaViolationError("relationship needs source and target", element="relationship")
            relationships.append(
                UmlRelationship(
                    kind=kind,
                    source=source,
                    target=target,
                    label=child.get("label", ""),
                    provenance=_split_prov(child.get("provenance", "")),
                )
            )
        else:
            raise SchemaViolationError(f"unexpected element {child.tag!r}", element=child.tag)

    for rel in relationships:
        for endpoint in (rel.source, rel.target):
            if endpoint not in seen_classes:
                raise DanglingEndpointError(
                    f"relationship endpoint {endpoint!r} is not a declared class", name=endpoint
                )

    meta = ModelMeta(
        source=root.get("source", ""),
        mode=root.get("mode", ""),
        generator=root.get("generator", ""),
    )
    return ClassModel(classes=tuple(classes), relationships=tuple(relationships), meta=meta)


def _check_attrs(element: ET.Element, allowed: set[str]) -> None:
    for key in element.attrib:
        if key not in allowed:
            raise SchemaViolationError(
                f"unexpected attribute {key!r} on {element.tag!r}", element=element.tag
            )


def _reject_text(element: ET.Element) -> None:
    chunks = [element.text or ""] + [sub.tail or "" for sub in element]
    for chunk in chunks:
        if chunk.strip():
            raise SchemaViolationError(
                f"unexpected text content in {element.tag!r}", element=element.tag
            )


def _split_prov(raw: str) -> tuple[str, ...]:
    return tuple(part for part in (p.strip() for p in raw.split(",")) if part)


_REL_ARROWS = {ASSOCIATION: "-->", AGGREGATION: "o--", GENERALIZATION: "--|>"}


def to_plantuml(model: ClassModel) -> str:
    """Render a model as PlantUML class-diagram source."""
    lines = ["@startuml"]
    for cls in model.classes:
        if cls.attributes:
            lines.append(f"class {cls.name} {{")
            lines.extend(f"  {attr.name}" for attr in cls.attributes)
            lines.append("}")
        else:
            lines.append(f"class {cls.name} {{")
            lines.append("}")
    for rel in model.relationships:
        arrow = _REL_ARROWS[rel.kind]
        line = f"{rel.source} {arrow} {rel.target}"
        if rel.label:
            line += f" : {rel.label}"
        lines.append(line)
    lines.append("@enduml")
    return "\n".join(lines) + "\n"
