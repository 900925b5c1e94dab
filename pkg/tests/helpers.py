"""Shared test utilities: pipeline shortcuts and seeded random model builders."""

from __future__ import annotations

import random
from importlib import resources
from pathlib import Path

from dcb.chunker import Clause, Phrase, chunk, extract_clauses
from dcb.ingest import Document, split_sentences, tokenize
from dcb.model import (
    AGGREGATION,
    ASSOCIATION,
    GENERALIZATION,
    ClassModel,
    ModelMeta,
    UmlAttribute,
    UmlClass,
    UmlRelationship,
)
from dcb.ontology import Concept, Ontology
from dcb.pipeline import extract_text
from dcb.rules import (
    CandidateAssociation,
    CandidateAttribute,
    CandidateClass,
    CandidateModel,
    Provenance,
    RuleConfig,
    apply_rules,
)
from dcb.tagger import TaggedToken, default_lexicon, tag


def corpus_dir() -> Path:
    return Path(resources.files("dcb") / "data" / "corpus")


def load_tagged_sample() -> list[tuple[str, list[tuple[str, str]]]]:
    """Parse the bundled hand-tagged sample into (sentence, [(surface, tag)]) pairs."""
    path = Path(resources.files("dcb") / "data" / "tagged_sample.tsv")
    groups: list[tuple[str, list[tuple[str, str]]]] = []
    sentence = None
    expected: list[tuple[str, str]] = []
    for raw in path.read_text(encoding="utf-8").splitlines():
        if raw.startswith("# sentence:"):
            if sentence is not None:
                groups.append((sentence, expected))
            sentence = raw[len("# sentence:"):].strip()
            expected = []
        elif raw.startswith("#") or not raw.strip():
            continue
        else:
            surface, tag_ = raw.split("\t")
            expected.append((surface, tag_))
    if sentence is not None:
        groups.append((sentence, expected))
    return groups


def sample_accuracy() -> tuple[int, int]:
    """(correct, total) of the bundled tagger against the hand-tagged sample."""
    lexicon = default_lexicon()
    correct = total = 0
    for sentence_text, expected in load_tagged_sample():
        doc = Document(id="sample", text=sentence_text, source_path="")
        sentences = split_sentences(doc)
        assert len(sentences) == 1
        tagged = tag(tokenize(sentences[0]), lexicon)
        assert [t.surface for t in tagged] == [surface for surface, _ in expected]
        for tok, (_, want) in zip(tagged, expected):
            total += 1
            correct += tok.tag == want
    return correct, total


def analyze(text: str) -> tuple[list[TaggedToken], list[Phrase], list[Clause]]:
    """Tag, chunk, and clause-split a single sentence."""
    doc = Document(id="test", text=text, source_path="")
    sentences = split_sentences(doc)
    assert len(sentences) == 1, f"expected one sentence in {text!r}"
    tagged = tag(tokenize(sentences[0]), default_lexicon())
    phrases = chunk(tagged)
    clauses = extract_clauses(tagged, phrases, 0)
    return tagged, phrases, clauses


def candidate(text: str, cfg: RuleConfig | None = None) -> CandidateModel:
    """Run the full shallow pipeline plus rules over a short text."""
    doc = Document(id="test", text=text, source_path="")
    all_clauses: list[Clause] = []
    for sentence in split_sentences(doc):
        tagged = tag(tokenize(sentence), default_lexicon())
        phrases = chunk(tagged)
        all_clauses.extend(extract_clauses(tagged, phrases, sentence.index))
    return apply_rules(all_clauses, cfg)


def final(text: str) -> ClassModel:
    return extract_text(text)


#: Names safe under normalization (lowercase-only; no plural-looking tails).
NAME_POOL = [
    "Anchor", "Basket", "Cabin", "Docket", "Engine", "Fabric", "Garden",
    "Hammer", "Ingot", "Jacket", "Kernel", "Ladder", "Magnet", "Needle",
    "Orchard", "Packet", "Quarry", "Rocket", "Saddle", "Tunnel", "Urn",
    "Vessel", "Wagon", "Yard", "Zeppelin", "Beacon", "Copper", "Drum",
]

ATTR_POOL = ["id", "code", "label", "weight", "color", "size", "owner", "origin"]

LABEL_POOL = ["hold", "use", "send", "check", "serve", "track"]


def random_class_model(rng: random.Random, *, max_classes: int = 8) -> ClassModel:
    """A structurally valid random ClassModel (for round-trip and eval tests)."""
    n = rng.randint(0, max_classes)
    names = rng.sample(NAME_POOL, n)
    classes = []
    for name in names:
        n_attrs = rng.randint(0, 3)
        attrs = tuple(
            UmlAttribute(a, provenance=_maybe_tags(rng))
            for a in rng.sample(ATTR_POOL, n_attrs)
        )
        classes.append(UmlClass(name, attributes=attrs, provenance=_maybe_tags(rng)))
    relationships = []
    seen = set()
    if len(names) >= 2:
        for _ in range(rng.randint(0, 6)):
            kind = rng.choice([ASSOCIATION, AGGREGATION, GENERALIZATION])
            source, target = rng.sample(names, 2)
            label = "" if kind == GENERALIZATION else rng.choice(LABEL_POOL)
            key = (kind, source, target, label)
            if key in seen:
                continue
            seen.add(key)
            relationships.append(
                UmlRelationship(kind, source, target, label=label, provenance=_maybe_tags(rng))
            )
    meta = ModelMeta(
        source=rng.choice(["", "reqs", "sample"]),
        mode=rng.choice(["", "strict", "lenient"]),
        generator=rng.choice(["", "dcb 0.1.0"]),
    )
    return ClassModel(classes=tuple(classes), relationships=tuple(relationships), meta=meta)


def _maybe_tags(rng: random.Random) -> tuple[str, ...]:
    if rng.random() < 0.5:
        return ()
    return tuple(
        f"R{rng.randint(1, 12)}:s{rng.randint(0, 9)}" for _ in range(rng.randint(1, 2))
    )


def random_candidate_model(rng: random.Random) -> CandidateModel:
    """A random rule-stage model: association endpoints always name classes."""
    model = CandidateModel()
    names = [n.lower() for n in rng.sample(NAME_POOL, rng.randint(1, 10))]
    for i, name in enumerate(names):
        model.add_class(name, Provenance("R1", i % 5, name))
    for _ in range(rng.randint(0, 5)):
        owner = rng.choice(names)
        model.add_attribute(owner, rng.choice(ATTR_POOL), Provenance("R9", rng.randint(0, 4), owner))
    if len(names) >= 2:
        for _ in range(rng.randint(0, 5)):
            source, target = rng.sample(names, 2)
            kind = rng.choice([ASSOCIATION, AGGREGATION, GENERALIZATION])
            label = "is_a" if kind == GENERALIZATION else rng.choice(LABEL_POOL)
            model.add_association(
                CandidateAssociation(source, target, label, kind, [Provenance("R10", rng.randint(0, 4), source)])
            )
    return model


def random_ontology(rng: random.Random) -> Ontology:
    """A random ontology over the shared name pool."""
    pool = [n.lower() for n in NAME_POOL]
    rng.shuffle(pool)
    n_concepts = rng.randint(0, 10)
    concept_names = pool[:n_concepts]
    rest = pool[n_concepts:]
    concepts = []
    used = 0
    for name in concept_names:
        synonyms = set()
        if rest[used:] and rng.random() < 0.4:
            synonyms.add(rest[used])
            used += 1
        concepts.append(
            Concept(
                name=name,
                synonyms=frozenset(synonyms),
                expected_attributes=frozenset(rng.sample(ATTR_POOL, rng.randint(0, 2))),
            )
        )
    irrelevant = frozenset(rng.sample(rest[used:], min(len(rest) - used, rng.randint(0, 3))))
    return Ontology(concepts=tuple(concepts), irrelevant=irrelevant)


def model_from_sets(
    class_names: list[str],
    attrs: list[tuple[str, str]] = (),
    rels: list[tuple[str, str, str, str]] = (),
) -> ClassModel:
    """Build a ClassModel directly from element keys (kind, source, target, label)."""
    by_owner: dict[str, list[UmlAttribute]] = {}
    for owner, name in attrs:
        by_owner.setdefault(owner, []).append(UmlAttribute(name))
    classes = tuple(
        UmlClass(name, attributes=tuple(by_owner.get(name, ()))) for name in class_names
    )
    relationships = tuple(
        UmlRelationship(kind, source, target, label=label) for kind, source, target, label in rels
    )
    return ClassModel(classes=classes, relationships=relationships)
