"""Plain-text loading, sentence splitting and tokenization.

Only UTF-8 plain text is accepted; binary word-processor formats are
rejected up front rather than half-parsed. Sentences and tokens carry
character spans so later stages can always point back at the exact source
fragment they were derived from.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .errors import DcbError

WORD = "word"
NUMBER = "number"
PUNCTUATION = "punctuation"

#: Period-terminated forms that do not end a sentence.
ABBREVIATIONS = frozenset({"e.g.", "i.e.", "etc.", "Mr.", "Mrs.", "Dr.", "No."})

_TERMINATORS = ".!?"

_NUMBER_RE = re.compile(r"\d+(?:\.\d+)?(?![0-9A-Za-z_])")
_WORD_RE = re.compile(r"[0-9A-Za-z_]+(?:'[0-9A-Za-z_]+)*")


class UnsupportedFormatError(DcbError):
    """Raised for input files that are not plain text."""


class EncodingError(DcbError):
    """Raised when a text file is not valid UTF-8."""


@dataclass(frozen=True)
class Document:
    id: str
    text: str
    source_path: str


@dataclass(frozen=True)
class Sentence:
    index: int
    text: str
    #: Character offsets into ``Document.text``.
    span: tuple[int, int]


@dataclass(frozen=True)
class Token:
    surface: str
    index: int
    kind: str
    #: Character offsets into ``Sentence.text``.
    span: tuple[int, int]


def load_document(path: str | Path) -> Document:
    """Read a UTF-8 text file into a :class:`Document`.

    The document id is the file stem. Line endings are normalized to ``\\n``
    and a leading BOM is dropped; everything else is kept verbatim.
    """
    p = Path(path)
    if not p.is_file():
        raise FileNotFoundError(f"{p}: no such file")
    if p.suffix.lower() != ".txt":
        raise UnsupportedFormatError(
            f"{p}: unsupported format {p.suffix or '(none)'!r}; only plain text (.txt) is supported"
        )
    raw = p.read_bytes()
    try:
        text = raw.decode("utf-8-sig")
    except UnicodeDecodeError as exc:
        raise EncodingError(f"{p}: not valid UTF-8 ({exc})") from exc
    text = text.replace("\r\n", "\n").replace("\r", "\n")
    return Document(id=p.stem, text=text, source_path=str(p))


def split_sentences(doc: Document, *, extra_abbreviations: tuple[str, ...] = ()) -> list[Sentence]:
    """Split a document at sentence-final ``.``, ``!`` or ``?``.

    A terminator only counts when followed by whitespace or end of text, and
    a period is ignored when it closes a known abbreviation. Whitespace-only
    stretches never become sentences.
    """
    abbrevs = ABBREVIATIONS | frozenset(extra_abbreviations)
    text = doc.text
    sentences: list[Sentence] = []
    start = 0
    for i, ch in enumerate(text):
        if ch not in _TERMINATORS:
            continue
        if i + 1 < len(text) and not text[i + 1].isspace():
            continue
        if ch == "." and _ends_abbreviation(text, i, abbrevs):
            continue
        _append_sentence(sentences, text, start, i + 1)
        start = i + 1
    _append_sentence(sentences, text, start, len(text))
    return sentences


def _ends_abbreviation(text: str, dot: int, abbrevs: frozenset[str]) -> bool:
    j = dot
    while j > 0 and (text[j - 1].isalnum() or text[j - 1] == "."):
        j -= 1
    return text[j : dot + 1] in abbrevs


def _append_sentence(out: list[Sentence], text: str, start: int, end: int) -> None:
    a, b = start, end
    while a < b and text[a].isspace():
        a += 1
    while b > a and text[b - 1].isspace():
        b -= 1
    if a < b:
        out.append(Sentence(index=len(out), text=text[a:b], span=(a, b)))


def tokenize(sentence: Sentence) -> list[Token]:
    """Break a sentence into word, number and punctuation tokens.

    Words are maximal runs of letters, digits, underscores and word-internal
    apostrophes; a trailing possessive marker (``'s`` or a bare ``'``) is
    split off as its own word token. Digit runs with at most one internal
    dot are numbers; any other non-space character is punctuation.
    """
    text = sentence.text
    tokens: list[Token] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        m = _NUMBER_RE.match(text, i)
        if m:
            _append_token(tokens, m.group(), NUMBER, i)
            i = m.end()
            continue
        m = _WORD_RE.match(text, i)
        if m:
            surface = m.group()
            if len(surface) > 2 and surface.lower().endswith("'s"):
                _append_token(tokens, surface[:-2], WORD, i)
                _append_token(tokens, surface[-2:], WORD, i + len(surface) - 2)
            else:
                _append_token(tokens, surface, WORD, i)
            i = m.end()
            continue
        if ch == "'" and tokens and tokens[-1].kind == WORD and tokens[-1].span[1] == i:
            # trailing possessive marker, as in "members'"
            _append_token(tokens, "'", WORD, i)
        else:
            _append_token(tokens, ch, PUNCTUATION, i)
        i += 1
    return tokens


def _append_token(out: list[Token], surface: str, kind: str, start: int) -> None:
    out.append(Token(surface=surface, index=len(out), kind=kind, span=(start, start + len(surface))))
