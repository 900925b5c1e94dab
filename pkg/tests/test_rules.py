"""Heuristic rules R1-R12 over hand-derived cases and properties."""

from __future__ import annotations

import pytest

from dcb.ingest import Token
from dcb.chunker import Phrase
from dcb.rules import (
    AttributeRole,
    ClassRole,
    IgnoredRole,
    MalformedRuleConfigLineError,
    RuleConfig,
    classify_noun_phrase,
    display_name,
)
from dcb.tagger import TaggedToken
from helpers import analyze, candidate
from rulecases import RULE_CASES


def fired_rules(text: str) -> set[str]:
    events = []
    doc_model = candidate_with_trace(text, events)
    del doc_model
    return {rule for rule, _, _, _ in events}


def candidate_with_trace(text: str, events: list):
    from dcb.chunker import chunk, extract_clauses
    from dcb.ingest import Document, split_sentences, tokenize
    from dcb.rules import apply_rules
    from dcb.tagger import default_lexicon, tag

    doc = Document(id="t", text=text, source_path="")
    clauses = []
    for sentence in split_sentences(doc):
        tagged = tag(tokenize(sentence), default_lexicon())
        clauses.extend(extract_clauses(tagged, chunk(tagged), sentence.index))
    return apply_rules(clauses, None, lambda *e: events.append(e))


@pytest.mark.parametrize("case", RULE_CASES, ids=lambda c: f"{c.rule}-{c.name}")
def test_rule_case(case):
    events = []
    model = candidate_with_trace(case.text, events)
    assert frozenset(c.name for c in model.classes) == case.classes
    assert frozenset((a.owner, a.name) for a in model.attributes) == case.attributes
    assert (
        frozenset((a.source, a.target, a.label, a.kind) for a in model.associations)
        == case.associations
    )
    fired = {rule for rule, _, _, _ in events}
    assert (case.rule in fired) == case.fires


def make_np(*nouns: str) -> Phrase:
    tokens = []
    offset = 0
    for i, noun in enumerate(nouns):
        token = Token(surface=noun, index=i, kind="word", span=(offset, offset + len(noun)))
        tokens.append(TaggedToken(token=token, tag="NN", lemma=noun))
        offset += len(noun) + 1
    return Phrase(kind="NP", tokens=tuple(tokens), head=tokens[-1])


class TestClassifyNounPhrase:
    def setup_method(self):
        self.cfg = RuleConfig()

    def np_of(self, text: str, which: int = 0) -> Phrase:
        _, phrases, _ = analyze(text)
        return [p for p in phrases if p.kind == "NP"][which]

    def test_common_noun_is_class(self):
        role = classify_noun_phrase(self.np_of("a doctor works"), None, self.cfg)
        assert role == ClassRole("doctor", "R1")

    def test_environment_noun_is_ignored(self):
        role = classify_noun_phrase(self.np_of("the system works"), None, self.cfg)
        assert isinstance(role, IgnoredRole)
        assert role.rule == "R4"

    def test_underscore_indicator_is_attribute(self):
        role = classify_noun_phrase(self.np_of("person_id is stored"), None, self.cfg)
        assert role == AttributeRole("person", "id", "R6")

    def test_compound_with_indicator_tail(self):
        role = classify_noun_phrase(self.np_of("the room type is stored"), None, self.cfg)
        assert role == AttributeRole("room", "type", "R8")

    def test_proper_noun_is_ignored(self):
        role = classify_noun_phrase(self.np_of("members help John", which=1), None, self.cfg)
        assert isinstance(role, IgnoredRole)
        assert role.rule == "R5"

    def test_gerund_is_class_with_ing_name(self):
        role = classify_noun_phrase(self.np_of("Borrowing is recorded."), None, self.cfg)
        assert role == ClassRole("borrowing", "R2")

    def test_plural_compound_lemmatized(self):
        role = classify_noun_phrase(self.np_of("the library cards are stored"), None, self.cfg)
        assert role == ClassRole("library_card", "R8")


def test_rule8_dichotomy_matches_rule_text_brute_force():
    """Exhaustive 2-noun check against a direct restatement of the rule."""
    cfg = RuleConfig()
    nouns = ["room", "type", "code", "library", "card", "date", "loan", "register", "id", "account"]
    for first in nouns:
        for last in nouns:
            role = classify_noun_phrase(make_np(first, last), None, cfg)
            if last in cfg.attribute_indicators:
                assert role == AttributeRole(first, last, "R8"), (first, last)
            else:
                assert role == ClassRole(f"{first}_{last}", "R8"), (first, last)


class TestRuleConfig:
    def test_builtin_default_word_lists(self):
        cfg = RuleConfig()
        assert cfg.environment_nouns == frozenset(
            {"database", "record", "system", "company", "information", "organization", "detail"}
        )
        assert cfg.attribute_indicators == frozenset(
            {"number", "no", "code", "date", "type", "volume", "birth", "id", "address", "name"}
        )
        assert cfg.aggregation_verbs == frozenset(
            {"include", "involve", "consist", "contain", "comprise", "divide", "embrace"}
        )
        assert cfg.relation_prepositions == frozenset({"in", "on", "to", "by"})

    def test_from_file_extends_defaults(self, tmp_path):
        path = tmp_path / "rules.cfg"
        path.write_text(
            "# project words\nenvironment_noun ledger\naggregation_verb hold\n"
            "attribute_indicator label\nrelation_preposition for\n",
            encoding="utf-8",
        )
        cfg = RuleConfig.from_file(path)
        assert "ledger" in cfg.environment_nouns
        assert "system" in cfg.environment_nouns
        assert "hold" in cfg.aggregation_verbs
        assert "label" in cfg.attribute_indicators
        assert "for" in cfg.relation_prepositions

    def test_malformed_line_raises(self, tmp_path):
        path = tmp_path / "rules.cfg"
        path.write_text("environment_noun\n", encoding="utf-8")
        with pytest.raises(MalformedRuleConfigLineError):
            RuleConfig.from_file(path)

    def test_unknown_directive_raises(self, tmp_path):
        path = tmp_path / "rules.cfg"
        path.write_text("verb_list give\n", encoding="utf-8")
        with pytest.raises(MalformedRuleConfigLineError):
            RuleConfig.from_file(path)

    def test_custom_environment_noun_is_applied(self, tmp_path):
        path = tmp_path / "rules.cfg"
        path.write_text("environment_noun warehouse\n", encoding="utf-8")
        cfg = RuleConfig.from_file(path)
        model = candidate("The warehouse stores books.", cfg)
        assert frozenset(c.name for c in model.classes) == frozenset({"book"})


class TestMerging:
    def test_repeated_mention_merges_provenance(self):
        model = candidate("A doctor works. A doctor helps.")
        doctors = [c for c in model.classes if c.name == "doctor"]
        assert len(doctors) == 1
        indices = {p.sentence_index for p in doctors[0].provenance}
        assert indices == {0, 1}

    def test_every_element_has_provenance(self):
        model = candidate(
            "A member has a name. The library lends books to members. "
            "The catalog consists of entries."
        )
        valid = {f"R{i}" for i in range(1, 13)} | {"ONT"}
        for cls in model.classes:
            assert cls.provenance and all(p.rule_id in valid for p in cls.provenance)
        for attr in model.attributes:
            assert attr.provenance and all(p.rule_id in valid for p in attr.provenance)
        for assoc in model.associations:
            assert assoc.provenance and all(p.rule_id in valid for p in assoc.provenance)

    def test_provenance_tag_format(self):
        model = candidate("A doctor works.")
        tags = [p.tag() for c in model.classes for p in c.provenance]
        assert tags == ["R1:s0"]

    def test_concatenated_documents_merge_element_sets(self):
        first = "The library lends books to members."
        second = "A member has a name. The catalog consists of entries."
        merged = candidate(f"{first} {second}")
        separate = (candidate(first), candidate(second))

        def keys(model):
            return (
                frozenset(c.name for c in model.classes),
                frozenset((a.owner, a.name) for a in model.attributes),
                frozenset((a.source, a.target, a.label, a.kind) for a in model.associations),
            )

        merged_classes, merged_attrs, merged_assocs = keys(merged)
        first_keys = keys(separate[0])
        second_keys = keys(separate[1])
        assert merged_classes == first_keys[0] | second_keys[0]
        assert merged_attrs == first_keys[1] | second_keys[1]
        assert merged_assocs == first_keys[2] | second_keys[2]


class TestAttributeOwnership:
    def test_environment_owner_drops_attribute(self):
        model = candidate("The system_id is stored.")
        assert model.attributes == []
        assert model.classes == []

    def test_attribute_name_may_coexist_with_class(self):
        model = candidate("A member has an address. The address is stored.")
        names = {c.name for c in model.classes}
        assert "address" in names
        assert ("member", "address") in {(a.owner, a.name) for a in model.attributes}


def test_display_name_rendering():
    assert display_name("loan_register") == "LoanRegister"
    assert display_name("doctor") == "Doctor"
    assert display_name("saving_account") == "SavingAccount"
