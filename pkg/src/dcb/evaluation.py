"""Scoring extracted class models against hand-authored gold models.

Matching is set-based over normalized names (lowercased, singularized):
classes match by name, attributes by (owner, name), relationships by kind
plus the unordered endpoint pair. Relationship labels are ignored unless
``strict_labels`` is set, in which case the lowercased label must match
too.

Metrics use exact rational arithmetic:

* recall          = n_correct / n_key
* precision       = n_correct / n_response
* over_generation = n_extra / n_key

with the 0/0 conventions recall = precision = 1 and over_generation = 0.
Multi-document aggregation is a micro-average: counts are summed across
documents and the metrics recomputed from the sums.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .model import ClassModel
from .tagger import lemmatize


@dataclass(frozen=True)
class MatchCounts:
    n_key: int
    n_response: int
    n_correct: int

    @property
    def n_extra(self) -> int:
        return self.n_response - self.n_correct

    @property
    def n_missing(self) -> int:
        return self.n_key - self.n_correct

    def __add__(self, other: "MatchCounts") -> "MatchCounts":
        return MatchCounts(
            self.n_key + other.n_key,
            self.n_response + other.n_response,
            self.n_correct + other.n_correct,
        )


@dataclass(frozen=True)
class CategoryScore:
    counts: MatchCounts
    recall: Fraction
    precision: Fraction
    over_generation: Fraction


@dataclass(frozen=True)
class EvalReport:
    classes: CategoryScore
    attributes: CategoryScore
    relationships: CategoryScore
    combined: CategoryScore


def normalize_name(name: str) -> str:
    """Lowercase and singularize a name so Members == member."""
    return lemmatize(name.lower(), "NNS")


def _score(counts: MatchCounts) -> CategoryScore:
    if counts.n_key == 0:
        recall = Fraction(1)
        over = Fraction(0)
    else:
        recall = Fraction(counts.n_correct, counts.n_key)
        over = Fraction(counts.n_extra, counts.n_key)
    if counts.n_response == 0:
        precision = Fraction(1)
    else:
        precision = Fraction(counts.n_correct, counts.n_response)
    return CategoryScore(counts, recall, precision, over)


def _class_keys(model: ClassModel) -> set[str]:
    return {normalize_name(c.name) for c in model.classes}


def _attribute_keys(model: ClassModel) -> set[tuple[str, str]]:
    return {
        (normalize_name(c.name), normalize_name(a.name))
        for c in model.classes
        for a in c.attributes
    }


def _relationship_keys(model: ClassModel, strict_labels: bool) -> set[tuple]:
    keys = set()
    for r in model.relationships:
        endpoints = frozenset((normalize_name(r.source), normalize_name(r.target)))
        key: tuple = (r.kind, endpoints)
        if strict_labels:
            key = (r.kind, endpoints, r.label.lower())
        keys.add(key)
    return keys


def _count(response_keys: set, key_keys: set) -> MatchCounts:
    return MatchCounts(
        n_key=len(key_keys),
        n_response=len(response_keys),
        n_correct=len(response_keys & key_keys),
    )


def compare(response: ClassModel, key: ClassModel, *, strict_labels: bool = False) -> EvalReport:
    """Score a response model against a gold key model."""
    classes = _count(_class_keys(response), _class_keys(key))
    attributes = _count(_attribute_keys(response), _attribute_keys(key))
    relationships = _count(
        _relationship_keys(response, strict_labels), _relationship_keys(key, strict_labels)
    )
    combined = classes + attributes + relationships
    return EvalReport(
        classes=_score(classes),
        attributes=_score(attributes),
        relationships=_score(relationships),
        combined=_score(combined),
    )


def aggregate(reports: Iterable[EvalReport]) -> EvalReport:
    """Micro-average several per-document reports into one."""
    zero = MatchCounts(0, 0, 0)
    classes = attributes = relationships = zero
    for report in reports:
        classes = classes + report.classes.counts
        attributes = attributes + report.attributes.counts
        relationships = relationships + report.relationships.counts
    combined = classes + attributes + relationships
    return EvalReport(
        classes=_score(classes),
        attributes=_score(attributes),
        relationships=_score(relationships),
        combined=_score(combined),
    )


_CATEGORIES = ("classes", "attributes", "relationships", "combined")


def format_table(report: EvalReport) -> str:
    """Fixed-width human-readable score table (3-decimal metrics)."""
    header = f"{'category':<14} {'key':>5} {'resp':>5} {'corr':>5} {'recall':>8} {'precis':>8} {'overgen':>8}"
    lines = [header, "-" * len(header)]
    for name in _CATEGORIES:
        score: CategoryScore = getattr(report, name)
        c = score.counts
        lines.append(
            f"{name:<14} {c.n_key:>5} {c.n_response:>5} {c.n_correct:>5} "
            f"{float(score.recall):>8.3f} {float(score.precision):>8.3f} {float(score.over_generation):>8.3f}"
        )
    return "\n".join(lines) + "\n"


def machine_lines(report: EvalReport) -> str:
    """Stable ``category.field=value`` lines for scripted consumers."""
    lines = []
    for name in _CATEGORIES:
        score: CategoryScore = getattr(report, name)
        c = score.counts
        lines.append(f"{name}.n_key={c.n_key}")
        lines.append(f"{name}.n_response={c.n_response}")
        lines.append(f"{name}.n_correct={c.n_correct}")
        lines.append(f"{name}.recall={float(score.recall)!r}")
        lines.append(f"{name}.precision={float(score.precision)!r}")
        lines.append(f"{name}.over_generation={float(score.over_generation)!r}")
    return "\n".join(lines) + "\n"
