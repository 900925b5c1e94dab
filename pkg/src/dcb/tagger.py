"""Lexicon-driven part-of-speech tagging and rule-based lemmatization.

The tagger is deliberately simple: exact lexicon lookup on the lowercased
surface form wins, then a fixed chain of suffix and shape fallbacks decides
the tag. There is no context model beyond the token position needed to keep
sentence-initial capitalization from looking like a proper noun.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from pathlib import Path

from . import wordlists
from .errors import DcbError
from .ingest import NUMBER, PUNCTUATION, Token

TAGSET = frozenset(
    {
        "DT", "NN", "NNS", "NNP", "VB", "VBZ", "VBP", "VBD", "VBN", "VBG",
        "MD", "IN", "TO", "CC", "JJ", "RB", "PRP", "PRP$", "POS", "CD",
        "PUNCT",
    }
)

VERB_TAGS = frozenset({"VB", "VBZ", "VBP", "VBD", "VBN", "VBG"})
NOUN_TAGS = frozenset({"NN", "NNS", "NNP"})

IRREGULAR_PLURALS = {
    "children": "child",
    "people": "person",
    "men": "man",
    "women": "woman",
    "data": "datum",
}

IRREGULAR_VERBS = {
    "am": "be", "is": "be", "are": "be", "was": "be", "were": "be",
    "been": "be", "being": "be",
    "has": "have", "had": "have", "having": "have",
    "does": "do", "did": "do", "done": "do", "doing": "do",
    "gave": "give", "given": "give", "took": "take", "taken": "take",
    "made": "make", "sent": "send", "held": "hold", "kept": "keep",
    "paid": "pay", "sold": "sell", "bought": "buy", "found": "find",
    "lent": "lend", "got": "get",
}


class MalformedLexiconLineError(DcbError):
    """Raised for a lexicon line that is not ``word TAG``."""

    def __init__(self, path: str, line_no: int, line: str):
        super().__init__(f"{path}:{line_no}: malformed lexicon line {line!r}")
        self.line_no = line_no
        self.line = line


class ClosedClassOverrideError(DcbError):
    """Raised when a lexicon file tries to re-tag a closed-class word."""

    def __init__(self, path: str, line_no: int, word: str):
        super().__init__(f"{path}:{line_no}: {word!r} is closed-class and cannot be overridden")
        self.word = word


@dataclass(frozen=True)
class TaggedToken:
    token: Token
    tag: str
    lemma: str

    @property
    def surface(self) -> str:
        return self.token.surface


class TagLexicon:
    """Immutable map from lowercased word form to tag."""

    def __init__(self, entries: dict[str, str]):
        self._entries = dict(entries)

    def get(self, form: str) -> str | None:
        return self._entries.get(form)

    def __contains__(self, form: str) -> bool:
        return form in self._entries

    def __len__(self) -> int:
        return len(self._entries)


def load_lexicon(path: str | Path | None = None) -> TagLexicon:
    """Build a lexicon from the bundled entries plus an optional user file.

    File format: one ``word TAG`` pair per line (any whitespace separator),
    ``#`` starts a comment, blank lines are ignored. User entries may shadow
    bundled open-class entries but never the closed-class core.
    """
    entries = dict(wordlists.OPEN_CLASS)
    entries.update(wordlists.CLOSED_CLASS)
    if path is None:
        return TagLexicon(entries)
    p = Path(path)
    for line_no, raw in enumerate(p.read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2 or fields[1] not in TAGSET:
            raise MalformedLexiconLineError(str(p), line_no, raw)
        word = fields[0].lower()
        if word in wordlists.CLOSED_CLASS:
            raise ClosedClassOverrideError(str(p), line_no, word)
        entries[word] = fields[1]
    return TagLexicon(entries)


@functools.lru_cache(maxsize=1)
def default_lexicon() -> TagLexicon:
    return load_lexicon()


def tag(tokens: list[Token], lexicon: TagLexicon) -> list[TaggedToken]:
    """Assign one tag and lemma per token.

    Lexicon hits win; a word listed with the generic verb tag ``VB`` becomes
    VBZ when it ends in ``-s`` and VBP otherwise. Everything else falls back
    on token kind, suffix shape, and non-initial capitalization, defaulting
    to NN.
    """
    return [_tag_one(t, lexicon) for t in tokens]


def _tag_one(token: Token, lexicon: TagLexicon) -> TaggedToken:
    t = _pick_tag(token, lexicon)
    return TaggedToken(token=token, tag=t, lemma=lemmatize(token.surface, t))


def _pick_tag(token: Token, lexicon: TagLexicon) -> str:
    if token.kind == PUNCTUATION:
        return "PUNCT"
    if token.kind == NUMBER:
        return "CD"
    form = token.surface.lower()
    hit = lexicon.get(form)
    if hit is not None:
        if hit == "VB":
            return "VBZ" if form.endswith("s") else "VBP"
        return hit
    if form in ("'s", "'"):
        return "POS"
    if form.endswith("ing"):
        return "VBG"
    if form.endswith("ed"):
        return "VBD"
    if form.endswith("ly"):
        return "RB"
    if token.index > 0 and token.surface[:1].isupper():
        return "NNP"
    if form.endswith("s") and not form.endswith("ss"):
        return "NNS"
    return "NN"


def lemmatize(surface: str, tag_: str) -> str:
    """Reduce a surface form to its lemma for the given tag.

    Plural nouns are singularized, finite/participial verbs are reduced to
    the infinitive; anything else just lowercases. Lemmas are fixed points:
    ``lemmatize(lemmatize(w, t), "NN")`` never changes the result again.
    """
    form = surface.lower()
    if tag_ == "NNS":
        return _singular_noun(form)
    if tag_ in VERB_TAGS:
        return _verb_base(form)
    return form


def _singular_noun(form: str) -> str:
    irregular = IRREGULAR_PLURALS.get(form)
    if irregular is not None:
        return irregular
    if form.endswith("ies") and len(form) > 3:
        return form[:-3] + "y"
    if form.endswith(("ses", "xes", "zes", "ches", "shes")):
        return form[:-2]
    if form.endswith("s") and not form.endswith("ss") and len(form) > 1:
        return form[:-1]
    return form


def _verb_base(form: str) -> str:
    irregular = IRREGULAR_VERBS.get(form)
    if irregular is not None:
        return irregular
    if form.endswith(("ies", "ied")) and len(form) > 3:
        return form[:-3] + "y"
    if form.endswith("s") and not form.endswith("ss"):
        candidates = []
        if form.endswith("es"):
            candidates.append(form[:-2])
        candidates.append(form[:-1])
        for cand in candidates:
            if cand in wordlists.VERB_BASES:
                return cand
        if form.endswith(("sses", "shes", "ches", "xes", "zes")):
            return form[:-2]
        return form[:-1]
    for suffix in ("ing", "ed"):
        if form.endswith(suffix) and len(form) > len(suffix) + 1:
            return _restore_base(form[: -len(suffix)])
    return form


def _restore_base(stem: str) -> str:
    if stem in wordlists.VERB_BASES:
        return stem
    if stem + "e" in wordlists.VERB_BASES:
        return stem + "e"
    if len(stem) > 2 and stem[-1] == stem[-2] and stem[:-1] in wordlists.VERB_BASES:
        return stem[:-1]
    return stem
