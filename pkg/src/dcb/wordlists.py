"""Bundled lexicon entries.

The closed-class table (determiners, prepositions, pronouns, conjunctions,
modals, forms of be/have/do and the possessive marker) is immutable: user
lexicon files may not override it. The open-class table holds default verb,
adjective, adverb and noun entries that requirements prose tends to need;
user lexicons may shadow those freely.

Verb bases listed with the generic tag ``VB`` are disambiguated to VBZ/VBP
at tagging time from the surface form, so both the base and the generated
third-person-singular form are entered here.
"""

from __future__ import annotations

CLOSED_CLASS: dict[str, str] = {}

_DETERMINERS = (
    "the a an this that these those each every all both some any no "
    "another either neither such"
).split()
_PREPOSITIONS = (
    "in on at by for with from of about into onto over under after before "
    "between among through during against without within upon per via "
    "across along around behind below beneath beside near off since toward "
    "towards until as if because while whether than like"
).split()
_CONJUNCTIONS = "and or but nor".split()
_MODALS = "can could may might must shall should will would".split()
_PRONOUNS = (
    "i you he she it we they me him us them who whom which what "
    "himself herself itself themselves oneself"
).split()
_POSSESSIVE_PRONOUNS = "my your his her its our their whose".split()

for _w in _DETERMINERS:
    CLOSED_CLASS[_w] = "DT"
for _w in _PREPOSITIONS:
    CLOSED_CLASS[_w] = "IN"
CLOSED_CLASS["to"] = "TO"
for _w in _CONJUNCTIONS:
    CLOSED_CLASS[_w] = "CC"
for _w in _MODALS:
    CLOSED_CLASS[_w] = "MD"
for _w in _PRONOUNS:
    CLOSED_CLASS[_w] = "PRP"
for _w in _POSSESSIVE_PRONOUNS:
    CLOSED_CLASS[_w] = "PRP$"

CLOSED_CLASS.update(
    {
        "am": "VBP",
        "is": "VBZ",
        "are": "VBP",
        "was": "VBD",
        "were": "VBD",
        "be": "VB",
        "been": "VBN",
        "being": "VBG",
        "have": "VB",
        "has": "VBZ",
        "had": "VBD",
        "having": "VBG",
        "do": "VB",
        "does": "VBZ",
        "did": "VBD",
        "done": "VBN",
        "doing": "VBG",
        "'s": "POS",
        "'": "POS",
    }
)

#: Verb bases used for default verb entries and for restoring a dropped
#: final "e" during lemmatization ("stored" -> "store").
VERB_BASES = frozenset(
    (
        "access add allow approve assign belong borrow buy calculate cancel "
        "carry charge check choose collect comprise compute confirm consist "
        "contain create debit delete deliver dispense display divide eject "
        "embrace enable enroll enter examine execute expire find generate "
        "get give handle help hold identify include inform insert involve "
        "issue keep lend log maintain make manage need notify offer operate "
        "own pass pay perform place print process produce provide read "
        "receive reduce reject remain remove renew require reserve return "
        "save search select sell send serve ship show store study submit "
        "support take teach track transfer treat update use validate verify "
        "want withdraw work write"
    ).split()
)


def _third_singular(base: str) -> str:
    if base.endswith(("s", "x", "z", "ch", "sh", "o")):
        return base + "es"
    if base.endswith("y") and len(base) > 1 and base[-2] not in "aeiou":
        return base[:-1] + "ies"
    return base + "s"


_IRREGULAR_VERB_FORMS = {
    "gave": "VBD",
    "given": "VBN",
    "took": "VBD",
    "taken": "VBN",
    "made": "VBD",
    "sent": "VBD",
    "held": "VBD",
    "kept": "VBD",
    "paid": "VBD",
    "sold": "VBD",
    "bought": "VBD",
    "found": "VBD",
    "lent": "VBD",
    "got": "VBD",
}

_ADJECTIVES = (
    "new available valid invalid unique secret main single multiple several "
    "current daily weekly monthly maximum minimum total overdue recent "
    "personal electronic automatic manual unclaimed registered bibliographic "
    "full empty active inactive important necessary responsible different "
    "same specific general public private internal external digital physical "
    "more other"
).split()

_ADVERBS = "not also only always never often then there here very too".split()

# Nouns whose default suffix tag would be wrong (thing -> VBG, status -> NNS)
# and irregular plurals the suffix fallback cannot reach.
_NOUNS = {
    "thing": "NN",
    "things": "NNS",
    "something": "NN",
    "anything": "NN",
    "nothing": "NN",
    "everything": "NN",
    "string": "NN",
    "status": "NN",
    "basis": "NN",
    "family": "NN",
    "people": "NNS",
    "children": "NNS",
    "men": "NNS",
    "women": "NNS",
    "data": "NNS",
}

_PROPER_NOUNS = "john mary smith london".split()

_NUMBER_WORDS = "one two three four five six seven eight nine ten".split()

OPEN_CLASS: dict[str, str] = {}
for _base in sorted(VERB_BASES):
    OPEN_CLASS[_base] = "VB"
    OPEN_CLASS[_third_singular(_base)] = "VB"
OPEN_CLASS.update(_IRREGULAR_VERB_FORMS)
for _w in _ADJECTIVES:
    OPEN_CLASS[_w] = "JJ"
for _w in _ADVERBS:
    OPEN_CLASS[_w] = "RB"
OPEN_CLASS.update(_NOUNS)
for _w in _PROPER_NOUNS:
    OPEN_CLASS[_w] = "NNP"
for _w in _NUMBER_WORDS:
    OPEN_CLASS[_w] = "CD"
