"""Domain ontology loading and candidate-model refinement.

An ontology file is a plain-text list of domain concepts, synonyms,
expected attributes, and explicitly irrelevant nouns::

    concept member
        synonym borrower
        attribute name
        attribute address
    concept book
    irrelevant system

Indentation is cosmetic; ``synonym`` and ``attribute`` lines apply to the
most recent ``concept``. All names are lowercased and noun-lemmatized, so
plural forms in the file are harmless.

Refinement checks every candidate class against the ontology: matches are
confirmed and renamed to the canonical concept name, names listed as
irrelevant are rejected, and unmatched names are rejected in strict mode
or left untouched in lenient mode. Attributes and associations follow
their classes (renamed, or removed when an endpoint was rejected).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from pathlib import Path

from .errors import DcbError
from .rules import (
    STATUS_CANDIDATE,
    STATUS_CONFIRMED,
    STATUS_REJECTED,
    CandidateAssociation,
    CandidateAttribute,
    CandidateClass,
    CandidateModel,
    Provenance,
    _merge_provenance,
)
from .tagger import lemmatize

STRICT = "strict"
LENIENT = "lenient"

REJECT_IRRELEVANT = "irrelevant"
REJECT_UNMATCHED = "not in ontology"


class MalformedOntologyLineError(DcbError):
    """Raised for an ontology line that does not parse."""


class DuplicateConceptError(DcbError):
    """Raised when the same concept name is declared twice."""


class SynonymCollisionError(DcbError):
    """Raised when a synonym collides with a concept or another synonym."""


@dataclass(frozen=True)
class Concept:
    name: str
    synonyms: frozenset[str] = frozenset()
    expected_attributes: frozenset[str] = frozenset()


@dataclass(frozen=True)
class Ontology:
    concepts: tuple[Concept, ...] = ()
    irrelevant: frozenset[str] = frozenset()

    def concept_named(self, name: str) -> Concept | None:
        for c in self.concepts:
            if c.name == name:
                return c
        return None


def _normalize(word: str) -> str:
    return lemmatize(word.lower(), "NNS")


def load_ontology(path: str | Path) -> Ontology:
    """Parse an ontology file; see the module docstring for the format."""
    p = Path(path)
    concepts: list[dict] = []
    irrelevant: list[tuple[int, str]] = []
    names: set[str] = set()
    for line_no, raw in enumerate(p.read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise MalformedOntologyLineError(f"{p}:{line_no}: malformed ontology line {raw!r}")
        directive, word = fields[0], _normalize(fields[1])
        if directive == "concept":
            if word in names:
                raise DuplicateConceptError(f"{p}:{line_no}: duplicate concept {word!r}")
            names.add(word)
            concepts.append({"name": word, "synonyms": set(), "attributes": set(), "line": line_no})
        elif directive == "irrelevant":
            irrelevant.append((line_no, word))
        elif directive in ("synonym", "attribute"):
            if not concepts:
                raise MalformedOntologyLineError(
                    f"{p}:{line_no}: {directive!r} before any concept declaration"
                )
            if directive == "synonym":
                concepts[-1]["synonyms"].add((line_no, word))
            else:
                concepts[-1]["attributes"].add(word)
        else:
            raise MalformedOntologyLineError(f"{p}:{line_no}: unknown directive {directive!r}")

    seen_synonyms: dict[str, str] = {}
    built = []
    for entry in concepts:
        keep = set()
        for line_no, syn in sorted(entry["synonyms"]):
            if syn == entry["name"]:
                continue
            if syn in names:
                raise SynonymCollisionError(
                    f"{p}:{line_no}: synonym {syn!r} collides with concept {syn!r}"
                )
            if syn in seen_synonyms and seen_synonyms[syn] != entry["name"]:
                raise SynonymCollisionError(
                    f"{p}:{line_no}: synonym {syn!r} already maps to {seen_synonyms[syn]!r}"
                )
            seen_synonyms[syn] = entry["name"]
            keep.add(syn)
        built.append(
            Concept(
                name=entry["name"],
                synonyms=frozenset(keep),
                expected_attributes=frozenset(entry["attributes"]),
            )
        )
    for line_no, word in irrelevant:
        if word in names:
            raise MalformedOntologyLineError(
                f"{p}:{line_no}: {word!r} is both a concept and irrelevant"
            )
    return Ontology(concepts=tuple(built), irrelevant=frozenset(w for _, w in irrelevant))


def match_concept(name: str, ontology: Ontology) -> Concept | None:
    """Find the concept whose name or synonyms cover ``name`` (normalized)."""
    norm = _normalize(name)
    for concept in ontology.concepts:
        if norm == concept.name or norm in concept.synonyms:
            return concept
    return None


def refine(model: CandidateModel, ontology: Ontology, mode: str = LENIENT) -> CandidateModel:
    """Return a new candidate model refined against the ontology.

    The input model is not modified; refining an already-refined model is
    a no-op (the operation is idempotent).
    """
    if mode not in (STRICT, LENIENT):
        raise ValueError(f"unknown refinement mode {mode!r}")

    renames: dict[str, str] = {}
    rejected: set[str] = set()
    out_classes: list[CandidateClass] = []
    by_name: dict[str, CandidateClass] = {}
    for cand in model.classes:
        prov = list(cand.provenance)
        ont_prov = Provenance("ONT", _first_sentence(prov), cand.name)
        if _normalize(cand.name) in ontology.irrelevant:
            new = CandidateClass(cand.name, prov, STATUS_REJECTED, REJECT_IRRELEVANT)
            _merge_provenance(new.provenance, [ont_prov])
            rejected.add(cand.name)
        else:
            concept = match_concept(cand.name, ontology)
            if concept is not None:
                renamed = concept.name
                if renamed != cand.name:
                    renames[cand.name] = renamed
                new = CandidateClass(renamed, prov, STATUS_CONFIRMED)
                _merge_provenance(new.provenance, [ont_prov])
            elif mode == STRICT:
                new = CandidateClass(cand.name, prov, STATUS_REJECTED, REJECT_UNMATCHED)
                _merge_provenance(new.provenance, [ont_prov])
                rejected.add(cand.name)
            else:
                new = CandidateClass(cand.name, prov, cand.status, cand.reject_reason)
        prior = by_name.get(new.name)
        if prior is not None and prior.status == new.status:
            _merge_provenance(prior.provenance, new.provenance)
        else:
            by_name[new.name] = new
            out_classes.append(new)

    out_attributes: list[CandidateAttribute] = []
    attr_keys: set[tuple[str, str]] = set()
    for attr in model.attributes:
        if attr.owner in rejected:
            continue
        owner = renames.get(attr.owner, attr.owner)
        prov = list(attr.provenance)
        concept = ontology.concept_named(owner)
        if concept is not None and _normalize(attr.name) in concept.expected_attributes:
            _merge_provenance(prov, [Provenance("ONT", _first_sentence(prov), f"{owner}.{attr.name}")])
        key = (owner, attr.name)
        if key in attr_keys:
            for prior_attr in out_attributes:
                if (prior_attr.owner, prior_attr.name) == key:
                    _merge_provenance(prior_attr.provenance, prov)
                    break
        else:
            attr_keys.add(key)
            out_attributes.append(CandidateAttribute(owner, attr.name, prov))

    out_associations: list[CandidateAssociation] = []
    assoc_keys: set[tuple[str, str, str, str]] = set()
    for assoc in model.associations:
        if assoc.source in rejected or assoc.target in rejected:
            continue
        source = renames.get(assoc.source, assoc.source)
        target = renames.get(assoc.target, assoc.target)
        key = (source, target, assoc.label, assoc.kind)
        if key in assoc_keys:
            for prior_assoc in out_associations:
                if (prior_assoc.source, prior_assoc.target, prior_assoc.label, prior_assoc.kind) == key:
                    _merge_provenance(prior_assoc.provenance, assoc.provenance)
                    break
        else:
            assoc_keys.add(key)
            out_associations.append(replace(assoc, source=source, target=target, provenance=list(assoc.provenance)))

    return CandidateModel(out_classes, out_attributes, out_associations)


def _first_sentence(provenance: list[Provenance]) -> int:
    return min((p.sentence_index for p in provenance), default=0)
