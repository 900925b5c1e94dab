"""Phrase chunking and shallow clause extraction over tagged sentences.

Chunking is greedy left-to-right over the tag sequence with three fixed
patterns:

* NP: ``(DT|PRP$)? JJ* (NN|NNS|NNP)+`` or ``(DT)? VBG`` when the gerund is
  not preceded by a form of "be" and not immediately followed by the start
  of a noun phrase;
* VG: ``MD? (VB|VBZ|VBP|VBD|VBN)+ RB?`` with the last verb as head;
* PP: ``(IN|TO)`` immediately followed by an NP, which becomes the embedded
  noun phrase.

Clause extraction then pairs each verb group with its nearest unclaimed
subject and object noun phrases, collects prepositional complements up to
the next verb group, and records genitive (owner, owned) pairs. Noun
phrases that end up in no clause role are emitted as subject-only clauses
so that every noun phrase reaches the rule stage.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tagger import NOUN_TAGS, TaggedToken

_NP_START = frozenset({"DT", "PRP$", "JJ"}) | NOUN_TAGS
_VG_VERB_TAGS = frozenset({"VB", "VBZ", "VBP", "VBD", "VBN"})


@dataclass(frozen=True)
class Phrase:
    kind: str  # "NP" | "VG" | "PP"
    tokens: tuple[TaggedToken, ...]
    head: TaggedToken
    embedded_np: "Phrase | None" = None

    @property
    def start(self) -> int:
        return self.tokens[0].token.index

    @property
    def end(self) -> int:
        return self.tokens[-1].token.index

    def text(self) -> str:
        """Reconstruct the surface text, collapsing inter-token gaps to one space."""
        parts = [self.tokens[0].token.surface]
        for prev, cur in zip(self.tokens, self.tokens[1:]):
            if cur.token.span[0] > prev.token.span[1]:
                parts.append(" ")
            parts.append(cur.token.surface)
        return "".join(parts)


@dataclass(frozen=True)
class Clause:
    sentence_index: int
    subject: Phrase | None
    verb: Phrase | None
    objects: tuple[Phrase, ...]
    #: (preposition lemma, embedded noun phrase) pairs after the verb.
    pp_complements: tuple[tuple[str, Phrase], ...]
    copular: bool
    #: (owner NP, owned NP) genitive pairs found anywhere in the sentence.
    possessed: tuple[tuple[Phrase, Phrase], ...]


def chunk(tagged: list[TaggedToken]) -> list[Phrase]:
    """Group a tagged sentence into non-overlapping NP/VG/PP phrases."""
    phrases: list[Phrase] = []
    i = 0
    n = len(tagged)
    while i < n:
        if tagged[i].tag in ("IN", "TO"):
            np_match = _match_np(tagged, i + 1)
            if np_match is not None:
                np, j = np_match
                phrases.append(Phrase("PP", (tagged[i], *np.tokens), tagged[i], np))
                i = j
                continue
            i += 1
            continue
        np_match = _match_np(tagged, i)
        if np_match is not None:
            phrases.append(np_match[0])
            i = np_match[1]
            continue
        vg_match = _match_vg(tagged, i)
        if vg_match is not None:
            phrases.append(vg_match[0])
            i = vg_match[1]
            continue
        i += 1
    return phrases


def _match_np(tagged: list[TaggedToken], i: int) -> tuple[Phrase, int] | None:
    n = len(tagged)
    j = i
    if j < n and tagged[j].tag in ("DT", "PRP$"):
        j += 1
    while j < n and tagged[j].tag == "JJ":
        j += 1
    k = j
    while k < n and tagged[k].tag in NOUN_TAGS:
        k += 1
    if k > j:
        tokens = tuple(tagged[i:k])
        return Phrase("NP", tokens, tokens[-1]), k
    # gerund acting as a noun
    g = i
    if g < n and tagged[g].tag == "DT":
        g += 1
    if g < n and tagged[g].tag == "VBG" and _gerund_as_noun(tagged, g):
        tokens = tuple(tagged[i : g + 1])
        return Phrase("NP", tokens, tagged[g]), g + 1
    return None


def _gerund_as_noun(tagged: list[TaggedToken], i: int) -> bool:
    if i > 0 and tagged[i - 1].lemma == "be":
        return False
    if i + 1 < len(tagged) and tagged[i + 1].tag in _NP_START:
        return False
    return True


def _match_vg(tagged: list[TaggedToken], i: int) -> tuple[Phrase, int] | None:
    n = len(tagged)
    j = i
    if j < n and tagged[j].tag == "MD":
        j += 1
    k = j
    while k < n and tagged[k].tag in _VG_VERB_TAGS:
        k += 1
    if k == j:
        return None
    head = tagged[k - 1]
    if k < n and tagged[k].tag == "RB":
        k += 1
    return Phrase("VG", tuple(tagged[i:k]), head), k


def extract_clauses(tagged: list[TaggedToken], phrases: list[Phrase], sentence_index: int) -> list[Clause]:
    """Derive clauses from the phrase list of one sentence.

    Each verb group claims the nearest preceding unclaimed NP as subject
    (falling back to the previous clause's subject when a coordinating
    conjunction links the verb groups) and the following unclaimed NPs, when
    conjoined, as its object list. A verbless sentence contributes one
    subject-only clause per leftover noun phrase.
    """
    nps = [p for p in phrases if p.kind == "NP"]
    vgs = [p for p in phrases if p.kind == "VG"]
    pps = [p for p in phrases if p.kind == "PP"]
    possessed = _possessed_pairs(tagged, nps, pps)

    claimed: set[int] = set()
    attached_pps: set[int] = set()
    drafts: list[dict] = []
    for vi, vg in enumerate(vgs):
        window_end = vgs[vi + 1].start if vi + 1 < len(vgs) else len(tagged)
        subject = _nearest_subject(nps, vg.start, claimed)
        if subject is None and vi > 0 and _has_cc_between(tagged, vgs[vi - 1].end, vg.start):
            subject = drafts[-1]["subject"]
        elif subject is not None:
            claimed.add(id(subject))
        objects = _collect_objects(tagged, nps, vg.end, window_end, claimed)
        clause_pps = []
        for pp in pps:
            if vg.end < pp.start < window_end:
                clause_pps.append((pp.head.lemma, pp.embedded_np))
                attached_pps.add(id(pp))
        drafts.append(
            {
                "subject": subject,
                "verb": vg,
                "objects": objects,
                "pps": tuple(clause_pps),
                "copular": vg.head.lemma == "be",
            }
        )

    for np in nps:
        if id(np) not in claimed:
            drafts.append({"subject": np, "verb": None, "objects": (), "pps": (), "copular": False})
    for pp in pps:
        if id(pp) not in attached_pps:
            drafts.append(
                {"subject": pp.embedded_np, "verb": None, "objects": (), "pps": (), "copular": False}
            )

    clauses = []
    for ci, d in enumerate(drafts):
        clauses.append(
            Clause(
                sentence_index=sentence_index,
                subject=d["subject"],
                verb=d["verb"],
                objects=d["objects"],
                pp_complements=d["pps"],
                copular=d["copular"],
                possessed=possessed if ci == 0 else (),
            )
        )
    return clauses


def _nearest_subject(nps: list[Phrase], before: int, claimed: set[int]) -> Phrase | None:
    best = None
    for np in nps:
        if np.end < before and id(np) not in claimed:
            best = np
    return best


def _collect_objects(
    tagged: list[TaggedToken],
    nps: list[Phrase],
    after: int,
    before: int,
    claimed: set[int],
) -> tuple[Phrase, ...]:
    window = [np for np in nps if after < np.start and np.end < before and id(np) not in claimed]
    if not window:
        return ()
    objects = [window[0]]
    claimed.add(id(window[0]))
    for np in window[1:]:
        gap = np.start - objects[-1].end
        if gap != 2:
            break
        sep = tagged[objects[-1].end + 1]
        if sep.tag != "CC" and sep.token.surface != ",":
            break
        objects.append(np)
        claimed.add(id(np))
    return tuple(objects)


def _has_cc_between(tagged: list[TaggedToken], a: int, b: int) -> bool:
    return any(t.tag == "CC" for t in tagged[a + 1 : b])


def _possessed_pairs(
    tagged: list[TaggedToken], nps: list[Phrase], pps: list[Phrase]
) -> tuple[tuple[Phrase, Phrase], ...]:
    all_nps = sorted(nps + [p.embedded_np for p in pps], key=lambda p: p.start)
    by_start = {np.start: np for np in all_nps}
    pairs = []
    for np in all_nps:
        marker = np.end + 1
        if marker < len(tagged) and tagged[marker].tag == "POS":
            owned = by_start.get(marker + 1)
            if owned is not None:
                pairs.append((np, owned))
    return tuple(pairs)
