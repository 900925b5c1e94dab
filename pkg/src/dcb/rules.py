"""Heuristic extraction rules mapping clauses to candidate model elements.

Twelve rules, identified as R1..R12 in provenance records and the trace
log, turn shallow clauses into a candidate class model:

* R1   every common-noun phrase head names a candidate class;
* R2   a gerund noun phrase names a class after its "-ing" surface form;
* R3   a copular clause between two classes yields a generalization from
       the subject (subtype) to the object (supertype);
* R4   configured environment nouns (system, database, ...) are ignored;
* R5   proper-noun heads are ignored;
* R6   an underscore compound whose final segment is an attribute
       indicator becomes an attribute of the leading segments;
* R7   a genitive pair makes the owned head an attribute of the owner;
* R8   a multi-noun compound becomes an attribute when the last noun is an
       attribute indicator, otherwise a compound-named class;
* R9   objects of "have" become attributes of the subject;
* R10  a transitive verb between two classes yields an association labeled
       with the verb lemma;
* R11  without a direct object, a configured preposition links the subject
       to the prepositional complement ("work_in");
* R12  configured aggregation verbs (contain, include, "consists of", ...)
       yield whole-part aggregations with the subject as the whole.

Noun classification applies R5 > R4 > R6 > R8 > R1 in that order of
precedence; per clause, classification runs first, then R3, then R12
(which overrides R10/R11), then R10/R11, then R7 and R9.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from .chunker import Clause, Phrase
from .errors import DcbError
from .tagger import NOUN_TAGS, lemmatize

ASSOCIATION = "association"
AGGREGATION = "aggregation"
GENERALIZATION = "generalization"

STATUS_CANDIDATE = "candidate"
STATUS_CONFIRMED = "confirmed"
STATUS_REJECTED = "rejected"

DEFAULT_ENVIRONMENT_NOUNS = frozenset(
    {"database", "record", "system", "company", "information", "organization", "detail"}
)
DEFAULT_ATTRIBUTE_INDICATORS = frozenset(
    {"number", "no", "code", "date", "type", "volume", "birth", "id", "address", "name"}
)
DEFAULT_AGGREGATION_VERBS = frozenset(
    {"include", "involve", "consist", "contain", "comprise", "divide", "embrace"}
)
DEFAULT_RELATION_PREPOSITIONS = frozenset({"in", "on", "to", "by"})

#: Aggregation verbs that take their part through a fixed preposition.
_AGGREGATION_PREPOSITIONS = {"consist": "of", "divide": "to"}

TraceFn = Callable[[str, int, str, str], None]


class MalformedRuleConfigLineError(DcbError):
    """Raised for a rule-config line that is not ``directive word``."""


@dataclass(frozen=True)
class RuleConfig:
    """Word lists steering the rules; file entries extend the defaults."""

    environment_nouns: frozenset[str] = DEFAULT_ENVIRONMENT_NOUNS
    attribute_indicators: frozenset[str] = DEFAULT_ATTRIBUTE_INDICATORS
    aggregation_verbs: frozenset[str] = DEFAULT_AGGREGATION_VERBS
    relation_prepositions: frozenset[str] = DEFAULT_RELATION_PREPOSITIONS

    @classmethod
    def from_file(cls, path: str | Path) -> "RuleConfig":
        """Extend the default word lists from a config file.

        Lines look like ``environment_noun ledger`` or ``aggregation_verb
        hold``; ``#`` comments and blank lines are ignored.
        """
        extra: dict[str, set[str]] = {
            "environment_noun": set(),
            "attribute_indicator": set(),
            "aggregation_verb": set(),
            "relation_preposition": set(),
        }
        p = Path(path)
        for line_no, raw in enumerate(p.read_text(encoding="utf-8").splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            if len(fields) != 2 or fields[0] not in extra:
                raise MalformedRuleConfigLineError(f"{p}:{line_no}: malformed rule config line {raw!r}")
            extra[fields[0]].add(fields[1].lower())
        return cls(
            environment_nouns=DEFAULT_ENVIRONMENT_NOUNS | frozenset(extra["environment_noun"]),
            attribute_indicators=DEFAULT_ATTRIBUTE_INDICATORS | frozenset(extra["attribute_indicator"]),
            aggregation_verbs=DEFAULT_AGGREGATION_VERBS | frozenset(extra["aggregation_verb"]),
            relation_prepositions=DEFAULT_RELATION_PREPOSITIONS | frozenset(extra["relation_preposition"]),
        )


@dataclass(frozen=True)
class Provenance:
    rule_id: str
    sentence_index: int
    snippet: str

    def tag(self) -> str:
        return f"{self.rule_id}:s{self.sentence_index}"


@dataclass
class CandidateClass:
    name: str
    provenance: list[Provenance]
    status: str = STATUS_CANDIDATE
    reject_reason: str = ""

    @property
    def display_name(self) -> str:
        return display_name(self.name)


@dataclass
class CandidateAttribute:
    owner: str
    name: str
    provenance: list[Provenance]


@dataclass
class CandidateAssociation:
    source: str
    target: str
    label: str
    kind: str
    provenance: list[Provenance]


@dataclass
class CandidateModel:
    """Mutable accumulation of rule output, deduplicated as it grows."""

    classes: list[CandidateClass] = field(default_factory=list)
    attributes: list[CandidateAttribute] = field(default_factory=list)
    associations: list[CandidateAssociation] = field(default_factory=list)

    def class_named(self, name: str) -> CandidateClass | None:
        for c in self.classes:
            if c.name == name:
                return c
        return None

    def add_class(self, name: str, prov: Provenance) -> CandidateClass:
        existing = self.class_named(name)
        if existing is not None:
            _merge_provenance(existing.provenance, [prov])
            return existing
        cand = CandidateClass(name=name, provenance=[prov])
        self.classes.append(cand)
        return cand

    def add_attribute(self, owner: str, name: str, prov: Provenance) -> CandidateAttribute:
        for a in self.attributes:
            if a.owner == owner and a.name == name:
                _merge_provenance(a.provenance, [prov])
                return a
        cand = CandidateAttribute(owner=owner, name=name, provenance=[prov])
        self.attributes.append(cand)
        return cand

    def add_association(self, cand: CandidateAssociation) -> CandidateAssociation:
        for a in self.associations:
            if (a.source, a.target, a.label, a.kind) == (cand.source, cand.target, cand.label, cand.kind):
                _merge_provenance(a.provenance, cand.provenance)
                return a
        self.associations.append(cand)
        return cand


def _merge_provenance(into: list[Provenance], extra: list[Provenance]) -> None:
    for p in extra:
        if p not in into:
            into.append(p)


def display_name(name: str) -> str:
    """UpperCamelCase display form of a lemma name ("loan_register" -> "LoanRegister")."""
    return "".join(part.capitalize() for part in name.split("_") if part)


@dataclass(frozen=True)
class ClassRole:
    name: str
    rule: str


@dataclass(frozen=True)
class AttributeRole:
    owner: str
    name: str
    rule: str


@dataclass(frozen=True)
class IgnoredRole:
    rule: str
    reason: str


NounRole = ClassRole | AttributeRole | IgnoredRole


def classify_noun_phrase(np: Phrase, clause: Clause | None, cfg: RuleConfig) -> NounRole:
    """Decide whether one noun phrase names a class, an attribute, or nothing.

    Precedence: gerund head (R2), proper-noun head (R5), environment noun
    (R4), underscore compound with attribute-indicator tail (R6), multi-noun
    compound (R8 attribute or R8 class), plain head noun (R1).
    """
    del clause  # classification needs no clause context today
    head = np.head
    if head.tag == "VBG":
        gerund = detect_gerund_class(np)
        assert gerund is not None
        return gerund
    if head.tag == "NNP":
        return IgnoredRole("R5", "proper noun")
    if head.lemma in cfg.environment_nouns:
        return IgnoredRole("R4", "environment noun")
    segments = [s for s in head.surface.lower().split("_") if s]
    if len(segments) >= 2:
        tail = lemmatize(segments[-1], "NNS")
        if tail in cfg.attribute_indicators:
            owner = "_".join(lemmatize(s, "NNS") for s in segments[:-1])
            return AttributeRole(owner, tail, "R6")
    nouns = [t for t in np.tokens if t.tag in NOUN_TAGS]
    if len(nouns) >= 2:
        if nouns[-1].lemma in cfg.attribute_indicators:
            owner = "_".join(t.lemma for t in nouns[:-1])
            return AttributeRole(owner, nouns[-1].lemma, "R8")
        return ClassRole("_".join(t.lemma for t in nouns), "R8")
    return ClassRole(head.lemma, "R1")


def detect_gerund_class(np: Phrase) -> ClassRole | None:
    """R2: a gerund-headed NP names a class after its "-ing" form."""
    if np.head.tag != "VBG":
        return None
    return ClassRole(np.head.token.surface.lower(), "R2")


def detect_generalization(clause: Clause, cfg: RuleConfig) -> CandidateAssociation | None:
    """R3: copular clause between two classes -> subject is a subtype of object."""
    if not clause.copular or clause.subject is None or not clause.objects:
        return None
    sub = classify_noun_phrase(clause.subject, clause, cfg)
    sup = classify_noun_phrase(clause.objects[0], clause, cfg)
    if not (isinstance(sub, ClassRole) and isinstance(sup, ClassRole)):
        return None
    snippet = f"{clause.subject.text()} {clause.verb.text()} {clause.objects[0].text()}"
    prov = Provenance("R3", clause.sentence_index, snippet)
    return CandidateAssociation(sub.name, sup.name, "is_a", GENERALIZATION, [prov])


def detect_genitive_attributes(clause: Clause, cfg: RuleConfig) -> list[CandidateAttribute]:
    """R7: each genitive pair with a class owner yields an attribute."""
    found = []
    for owner_np, owned_np in clause.possessed:
        owner = classify_noun_phrase(owner_np, clause, cfg)
        if not isinstance(owner, ClassRole):
            continue
        snippet = f"{owner_np.text()}'s {owned_np.text()}"
        prov = Provenance("R7", clause.sentence_index, snippet)
        found.append(CandidateAttribute(owner.name, owned_np.head.lemma, [prov]))
    return found


def detect_have_attributes(clause: Clause, cfg: RuleConfig) -> list[CandidateAttribute]:
    """R9: objects of "have" become attributes of the subject class."""
    if clause.verb is None or clause.verb.head.lemma != "have" or clause.subject is None:
        return []
    sub = classify_noun_phrase(clause.subject, clause, cfg)
    if not isinstance(sub, ClassRole):
        return []
    found = []
    for obj in clause.objects:
        snippet = f"{clause.subject.text()} {clause.verb.text()} {obj.text()}"
        prov = Provenance("R9", clause.sentence_index, snippet)
        found.append(CandidateAttribute(sub.name, obj.head.lemma, [prov]))
    return found


def detect_association(clause: Clause, cfg: RuleConfig) -> CandidateAssociation | None:
    """R10/R11: link subject and object (or prepositional complement) classes."""
    if clause.verb is None or clause.copular or clause.verb.head.lemma == "have":
        return None
    if clause.subject is None:
        return None
    sub = classify_noun_phrase(clause.subject, clause, cfg)
    if not isinstance(sub, ClassRole):
        return None
    verb_lemma = clause.verb.head.lemma
    if clause.objects:
        obj = classify_noun_phrase(clause.objects[0], clause, cfg)
        if not isinstance(obj, ClassRole):
            return None
        snippet = f"{clause.subject.text()} {clause.verb.text()} {clause.objects[0].text()}"
        prov = Provenance("R10", clause.sentence_index, snippet)
        return CandidateAssociation(sub.name, obj.name, verb_lemma, ASSOCIATION, [prov])
    for prep, np in clause.pp_complements:
        if prep not in cfg.relation_prepositions:
            continue
        target = classify_noun_phrase(np, clause, cfg)
        if isinstance(target, ClassRole):
            snippet = f"{clause.subject.text()} {clause.verb.text()} {prep} {np.text()}"
            prov = Provenance("R11", clause.sentence_index, snippet)
            return CandidateAssociation(sub.name, target.name, f"{verb_lemma}_{prep}", ASSOCIATION, [prov])
    return None


def detect_aggregation(clause: Clause, cfg: RuleConfig) -> CandidateAssociation | None:
    """R12: configured whole-part verbs make the subject aggregate the object."""
    if clause.verb is None or clause.subject is None:
        return None
    verb_lemma = clause.verb.head.lemma
    if verb_lemma not in cfg.aggregation_verbs:
        return None
    sub = classify_noun_phrase(clause.subject, clause, cfg)
    if not isinstance(sub, ClassRole):
        return None
    part_np = None
    if clause.objects:
        part_np = clause.objects[0]
    else:
        wanted = _AGGREGATION_PREPOSITIONS.get(verb_lemma)
        if wanted is not None:
            for prep, np in clause.pp_complements:
                if prep == wanted:
                    part_np = np
                    break
    if part_np is None:
        return None
    part = classify_noun_phrase(part_np, clause, cfg)
    if not isinstance(part, ClassRole):
        return None
    snippet = f"{clause.subject.text()} {clause.verb.text()} {part_np.text()}"
    prov = Provenance("R12", clause.sentence_index, snippet)
    return CandidateAssociation(sub.name, part.name, verb_lemma, AGGREGATION, [prov])


def apply_rules(
    clauses: list[Clause],
    cfg: RuleConfig | None = None,
    on_fire: TraceFn | None = None,
) -> CandidateModel:
    """Run all rules over the clauses of a document, in sentence order.

    Elements are merged by name/key with provenance concatenated; an
    attribute whose owner is an ignored noun is dropped on the spot. The
    optional ``on_fire`` callback sees every rule firing (rule id, sentence
    index, source snippet, result).
    """
    cfg = cfg or RuleConfig()
    model = CandidateModel()
    for clause in clauses:
        _apply_clause(model, clause, cfg, on_fire)
    return model


def _apply_clause(model: CandidateModel, clause: Clause, cfg: RuleConfig, on_fire: TraceFn | None) -> None:
    for np in _clause_noun_phrases(clause):
        role = classify_noun_phrase(np, clause, cfg)
        prov = Provenance(role.rule, clause.sentence_index, np.text())
        if isinstance(role, ClassRole):
            model.add_class(role.name, prov)
            _fire(on_fire, prov, f"class:{role.name}")
        elif isinstance(role, AttributeRole):
            if role.owner in cfg.environment_nouns:
                _fire(on_fire, prov, f"dropped-attribute:{role.owner}.{role.name}")
            else:
                model.add_attribute(role.owner, role.name, prov)
                _fire(on_fire, prov, f"attribute:{role.owner}.{role.name}")
        else:
            _fire(on_fire, prov, f"ignored:{role.reason}")

    gen = detect_generalization(clause, cfg)
    if gen is not None:
        model.add_association(gen)
        _fire(on_fire, gen.provenance[0], f"generalization:{gen.source}-is_a->{gen.target}")

    agg = detect_aggregation(clause, cfg)
    if agg is not None:
        model.add_association(agg)
        _fire(on_fire, agg.provenance[0], f"aggregation:{agg.source}-{agg.label}->{agg.target}")
    else:
        assoc = detect_association(clause, cfg)
        if assoc is not None:
            model.add_association(assoc)
            _fire(on_fire, assoc.provenance[0], f"association:{assoc.source}-{assoc.label}->{assoc.target}")

    for attr in detect_genitive_attributes(clause, cfg):
        model.add_attribute(attr.owner, attr.name, attr.provenance[0])
        _fire(on_fire, attr.provenance[0], f"attribute:{attr.owner}.{attr.name}")
    for attr in detect_have_attributes(clause, cfg):
        model.add_attribute(attr.owner, attr.name, attr.provenance[0])
        _fire(on_fire, attr.provenance[0], f"attribute:{attr.owner}.{attr.name}")


def _clause_noun_phrases(clause: Clause) -> list[Phrase]:
    candidates: list[Phrase] = []
    if clause.subject is not None:
        candidates.append(clause.subject)
    candidates.extend(clause.objects)
    candidates.extend(np for _, np in clause.pp_complements)
    for owner, owned in clause.possessed:
        candidates.extend((owner, owned))
    seen: set[int] = set()
    unique = []
    for np in candidates:
        if id(np) not in seen:
            seen.add(id(np))
            unique.append(np)
    unique.sort(key=lambda p: p.start)
    return unique


def _fire(on_fire: TraceFn | None, prov: Provenance, result: str) -> None:
    if on_fire is not None:
        on_fire(prov.rule_id, prov.sentence_index, prov.snippet, result)
