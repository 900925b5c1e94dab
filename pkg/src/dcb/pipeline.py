"""End-to-end extraction: text in, candidate and finalized models out.

This is the library entry point the command line wraps: split sentences,
tag, chunk, extract clauses, apply the heuristic rules, optionally refine
against an ontology, and finalize. Each step is importable on its own;
this module only sequences them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chunker import Clause, Phrase, chunk, extract_clauses
from .ingest import Document, Sentence, split_sentences, tokenize
from .model import ClassModel, finalize
from .ontology import LENIENT, Ontology, refine
from .rules import CandidateModel, RuleConfig, TraceFn, apply_rules
from .tagger import TaggedToken, TagLexicon, default_lexicon, tag


@dataclass(frozen=True)
class SentenceAnalysis:
    """Everything the shallow pipeline derived from one sentence."""

    sentence: Sentence
    tagged: tuple[TaggedToken, ...]
    phrases: tuple[Phrase, ...]
    clauses: tuple[Clause, ...]


def analyze_document(doc: Document, lexicon: TagLexicon | None = None) -> list[SentenceAnalysis]:
    """Run the shallow NLP stages over every sentence of a document."""
    lexicon = lexicon or default_lexicon()
    analyses = []
    for sentence in split_sentences(doc):
        tagged = tag(tokenize(sentence), lexicon)
        phrases = chunk(tagged)
        clauses = extract_clauses(tagged, phrases, sentence.index)
        analyses.append(
            SentenceAnalysis(
                sentence=sentence,
                tagged=tuple(tagged),
                phrases=tuple(phrases),
                clauses=tuple(clauses),
            )
        )
    return analyses


def extract_document(
    doc: Document,
    *,
    lexicon: TagLexicon | None = None,
    rule_config: RuleConfig | None = None,
    ontology: Ontology | None = None,
    mode: str = LENIENT,
    on_fire: TraceFn | None = None,
    generator: str = "",
) -> tuple[CandidateModel, ClassModel]:
    """Extract a class model from one document.

    Returns both the (possibly refined) candidate model, which keeps
    rejected elements for inspection, and the finalized model. The
    ``mode`` metadata is only recorded when an ontology was applied.
    """
    analyses = analyze_document(doc, lexicon)
    clauses = [clause for a in analyses for clause in a.clauses]
    candidate = apply_rules(clauses, rule_config, on_fire)
    applied_mode = ""
    if ontology is not None:
        candidate = refine(candidate, ontology, mode)
        applied_mode = mode
    final = finalize(candidate, source=doc.id, mode=applied_mode, generator=generator)
    return candidate, final


def extract_text(
    text: str,
    *,
    doc_id: str = "text",
    lexicon: TagLexicon | None = None,
    rule_config: RuleConfig | None = None,
    ontology: Ontology | None = None,
    mode: str = LENIENT,
    on_fire: TraceFn | None = None,
) -> ClassModel:
    """Convenience wrapper: extract a finalized model from a string."""
    doc = Document(id=doc_id, text=text, source_path="")
    _, final = extract_document(
        doc,
        lexicon=lexicon,
        rule_config=rule_config,
        ontology=ontology,
        mode=mode,
        on_fire=on_fire,
    )
    return final
