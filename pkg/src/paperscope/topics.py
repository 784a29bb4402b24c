"""Five-category topical taxonomy and the rule-based multi-label classifier.

A subtopic matches wherever one of its trigger phrases occurs as a whole
token sequence; matches in the title count triple and in the abstract
double, mirroring the search ranking weights. Papers may hold any number of
assignments across and within categories, including none.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

from .corpus import CorpusSnapshot, PaperId, PaperRecord, YearHistogram, normalize_author_name
from .errors import MalformedTaxonomy, UnknownSubtopic
from .index import tokenize

CATEGORY_NAMES = ("LinguisticTarget", "Task", "Approach", "Language", "DatasetType")

TITLE_WEIGHT = 3
ABSTRACT_WEIGHT = 2
FULL_TEXT_WEIGHT = 1
MAX_TRIGGER_TOKENS = 4

# Embedded default rule set; deployments extend it via a taxonomy file.
DEFAULT_TAXONOMY_DATA: dict[str, dict[str, list[str]]] = {
    "LinguisticTarget": {
        "Syntax": ["syntax", "syntactic"],
        "Discourse": ["discourse"],
        "Pragmatics": ["pragmatics", "pragmatic"],
        "Semantics": ["semantics", "semantic"],
        "Morphology": ["morphology", "morphological"],
    },
    "Task": {
        "Tagging": ["tagging", "part-of-speech tagging"],
        "Summarization": ["summarization", "summarisation"],
        "Chunking": ["chunking"],
        "Machine Translation": ["machine translation"],
        "Question Answering": ["question answering"],
    },
    "Approach": {
        "supervised": ["supervised"],
        "unsupervised": ["unsupervised"],
        "neural": ["neural"],
        "statistical": ["statistical"],
    },
    "Language": {
        "English": ["english"],
        "Chinese": ["chinese"],
        "Hindi": ["hindi"],
    },
    "DatasetType": {
        "news": ["news", "newswire"],
        "clinical notes": ["clinical notes", "clinical text"],
        "social media": ["social media", "tweets"],
        "speech": ["speech", "spoken"],
    },
}


@dataclass(frozen=True)
class SubtopicRule:
    name: str
    triggers: tuple[tuple[str, ...], ...]


@dataclass(frozen=True)
class Taxonomy:
    categories: dict[str, tuple[SubtopicRule, ...]]

    def rule(self, category: str, subtopic: str) -> SubtopicRule | None:
        for rule in self.categories.get(category, ()):
            if rule.name == subtopic:
                return rule
        return None

    def subtopic_pairs(self) -> tuple[tuple[str, str], ...]:
        return tuple(
            (category, rule.name)
            for category in CATEGORY_NAMES
            for rule in self.categories[category]
        )

    def raw(self) -> dict[str, dict[str, list[str]]]:
        return {
            category: {
                rule.name: [" ".join(t) for t in rule.triggers]
                for rule in self.categories[category]
            }
            for category in CATEGORY_NAMES
        }


def taxonomy_from_data(data) -> Taxonomy:
    if not isinstance(data, dict):
        raise MalformedTaxonomy("taxonomy must be an object of categories")
    unknown = set(data) - set(CATEGORY_NAMES)
    if unknown:
        raise MalformedTaxonomy(f"unknown categories: {sorted(unknown)}")
    missing = set(CATEGORY_NAMES) - set(data)
    if missing:
        raise MalformedTaxonomy(f"missing categories: {sorted(missing)}")

    categories: dict[str, tuple[SubtopicRule, ...]] = {}
    for category in CATEGORY_NAMES:
        subtopics = data[category]
        if not isinstance(subtopics, dict):
            raise MalformedTaxonomy(f"category {category!r} must map subtopics to triggers")
        rules = []
        for name, phrases in subtopics.items():
            if not isinstance(phrases, list) or not phrases:
                raise MalformedTaxonomy(
                    f"subtopic {category}/{name} must have a non-empty trigger list"
                )
            triggers = []
            for phrase in phrases:
                if not isinstance(phrase, str):
                    raise MalformedTaxonomy(f"trigger in {category}/{name} is not a string")
                tokens = tuple(tokenize(phrase))
                if not 1 <= len(tokens) <= MAX_TRIGGER_TOKENS:
                    raise MalformedTaxonomy(
                        f"trigger {phrase!r} in {category}/{name} must be 1-{MAX_TRIGGER_TOKENS} tokens"
                    )
                triggers.append(tokens)
            rules.append(SubtopicRule(name=name, triggers=tuple(triggers)))
        categories[category] = tuple(rules)
    return Taxonomy(categories=categories)


def default_taxonomy() -> Taxonomy:
    return taxonomy_from_data(DEFAULT_TAXONOMY_DATA)


def load_taxonomy(path: Path) -> Taxonomy:
    try:
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as exc:
        raise MalformedTaxonomy(f"cannot read taxonomy file {path}: {exc}") from exc
    return taxonomy_from_data(data)


@dataclass(frozen=True)
class TopicAssignment:
    paper_id: PaperId
    category: str
    subtopic: str
    match_count: int
    weight: float


def count_phrase(tokens: list[str], phrase: tuple[str, ...]) -> int:
    """Whole-token-sequence occurrences, sliding over every start position."""
    n = len(phrase)
    if n == 0 or n > len(tokens):
        return 0
    return sum(1 for i in range(len(tokens) - n + 1) if tuple(tokens[i : i + n]) == phrase)


def classify_paper(paper: PaperRecord, taxonomy: Taxonomy) -> tuple[TopicAssignment, ...]:
    fields = (
        (tokenize(paper.title), TITLE_WEIGHT),
        (tokenize(paper.abstract or ""), ABSTRACT_WEIGHT),
        (tokenize(paper.full_text or ""), FULL_TEXT_WEIGHT),
    )
    counts: list[tuple[str, str, int]] = []
    for category in CATEGORY_NAMES:
        for rule in taxonomy.categories[category]:
            count = sum(
                weight * count_phrase(tokens, trigger)
                for tokens, weight in fields
                for trigger in rule.triggers
            )
            if count >= 1:
                counts.append((category, rule.name, count))
    total = sum(c for _, _, c in counts)
    return tuple(
        TopicAssignment(
            paper_id=paper.id,
            category=category,
            subtopic=name,
            match_count=count,
            weight=count / total,
        )
        for category, name, count in counts
    )


def classify_corpus(
    snapshot: CorpusSnapshot, taxonomy: Taxonomy
) -> dict[PaperId, tuple[TopicAssignment, ...]]:
    return {
        pid: classify_paper(snapshot.papers[pid], taxonomy)
        for pid in sorted(snapshot.papers)
    }


def topic_year_distribution(
    category: str,
    subtopic: str,
    taxonomy: Taxonomy,
    snapshot: CorpusSnapshot,
    assignments: dict[PaperId, tuple[TopicAssignment, ...]],
    entity: str = "papers",
) -> YearHistogram:
    """Papers (or distinct authors) carrying the subtopic, per year."""
    if taxonomy.rule(category, subtopic) is None:
        raise UnknownSubtopic(f"no subtopic {subtopic!r} in category {category!r}")
    matching = [
        pid
        for pid, assigned in assignments.items()
        if any(a.category == category and a.subtopic == subtopic for a in assigned)
    ]
    if entity == "papers":
        return YearHistogram.from_years(snapshot.papers[pid].year for pid in matching)
    authors_by_year: dict[int, set[str]] = {}
    for pid in matching:
        record = snapshot.papers[pid]
        keys = authors_by_year.setdefault(record.year, set())
        for name in record.authors:
            keys.add(normalize_author_name(name))
    return YearHistogram.from_counts({y: len(keys) for y, keys in authors_by_year.items()})


@dataclass(frozen=True)
class TimelineEntry:
    category: str
    subtopic: str
    first_year: int


def first_occurrence_timeline(
    taxonomy: Taxonomy,
    snapshot: CorpusSnapshot,
    assignments: dict[PaperId, tuple[TopicAssignment, ...]],
) -> tuple[TimelineEntry, ...]:
    """Earliest publication year per subtopic; unmatched subtopics omitted."""
    first: dict[tuple[str, str], int] = {}
    for pid, assigned in assignments.items():
        year = snapshot.papers[pid].year
        for a in assigned:
            key = (a.category, a.subtopic)
            if key not in first or year < first[key]:
                first[key] = year
    return tuple(
        TimelineEntry(category=c, subtopic=s, first_year=y)
        for (c, s), y in sorted(first.items(), key=lambda kv: (kv[1], kv[0]))
    )


def entropy_of_weights(weights) -> float:
    """Shannon entropy (natural log) of a weight vector; 0.0 when empty."""
    return -sum(w * math.log(w) for w in weights if w > 0)


def diversity_entropy(assignments: tuple[TopicAssignment, ...]) -> float:
    return entropy_of_weights(a.weight for a in assignments)
