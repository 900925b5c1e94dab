"""Derive draft UML class models from English requirements text.

The pipeline is deliberately shallow: plain-text ingestion, lexicon-driven
part-of-speech tagging, pattern-based phrase chunking, and a dozen heuristic
rules that turn clauses into candidate classes, attributes and relationships.
An optional domain ontology refines the candidate model before it is
serialized to XML or PlantUML.
"""

__version__ = "0.1.0"

from .chunker import Clause, Phrase, chunk, extract_clauses
from .errors import DcbError
from .evaluation import EvalReport, MatchCounts, aggregate, compare
from .ingest import Document, Sentence, Token, load_document, split_sentences, tokenize
from .model import ClassModel, UmlClass, UmlRelationship, finalize, from_xml, to_plantuml, to_xml
from .ontology import Concept, Ontology, load_ontology, match_concept, refine
from .pipeline import extract_document, extract_text
from .rules import CandidateModel, RuleConfig, apply_rules, classify_noun_phrase
from .tagger import TagLexicon, TaggedToken, lemmatize, load_lexicon, tag

__all__ = [
    "CandidateModel",
    "ClassModel",
    "Clause",
    "Concept",
    "DcbError",
    "Document",
    "EvalReport",
    "MatchCounts",
    "Ontology",
    "Phrase",
    "RuleConfig",
    "Sentence",
    "TagLexicon",
    "TaggedToken",
    "Token",
    "UmlClass",
    "UmlRelationship",
    "__version__",
    "aggregate",
    "apply_rules",
    "chunk",
    "classify_noun_phrase",
    "compare",
    "extract_clauses",
    "extract_document",
    "extract_text",
    "finalize",
    "from_xml",
    "lemmatize",
    "load_document",
    "load_lexicon",
    "load_ontology",
    "match_concept",
    "refine",
    "split_sentences",
    "tag",
    "to_plantuml",
    "to_xml",
    "tokenize",
]
