"""Entity-page statistics and ranked lists over an immutable snapshot.

Citations are always bucketed by the citing paper's publication year, the
only date available in the corpus. All functions are pure reads.
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass
from enum import Enum

from .corpus import (
    CorpusSnapshot,
    PaperId,
    YearHistogram,
    normalize_author_name,
    normalize_venue_key,
)
from .errors import InvalidRequest, UnknownAuthor, UnknownPaper, UnknownVenue
from .index import tokenize
from .topics import TopicAssignment, diversity_entropy, entropy_of_weights

RECENT_YEARS = 5
SEMINAL_AGE = 10
SEMINAL_DISTINCT_YEARS = 5

SURVEY_TITLE_TOKENS = frozenset({"survey", "review", "overview", "tutorial"})

Assignments = dict[PaperId, tuple[TopicAssignment, ...]]


@dataclass(frozen=True)
class PaperStats:
    citations_by_year: YearHistogram
    total_citations: int
    similar_papers: tuple[tuple[PaperId, float], ...]
    topic_distribution: tuple[TopicAssignment, ...]
    mentioned_urls: tuple[str, ...]
    pdf_link: str | None


@dataclass(frozen=True)
class AuthorStats:
    publications_by_year: YearHistogram
    citations_by_year: YearHistogram
    topic_distribution: tuple[tuple[str, str, float], ...]
    venue_preference: tuple[tuple[str, int], ...]


@dataclass(frozen=True)
class VenueStats:
    publications_by_year: YearHistogram
    citations_by_year: YearHistogram
    topic_distribution: tuple[tuple[str, str, float], ...]
    papers_by_year: dict[int, tuple[PaperId, ...]]
    top_citing_venues: tuple[tuple[str, int], ...]
    top_cited_venues: tuple[tuple[str, int], ...]
    top_authors: tuple[tuple[str, int], ...]
    topic_shift: dict[int, tuple[tuple[str, str, float], ...]]


class RankedListKind(str, Enum):
    RECENT_POPULAR_PAPERS = "RecentPopularPapers"
    SURVEY_PAPERS = "SurveyPapers"
    SEMINAL_PAPERS = "SeminalPapers"
    DIVERSE_PAPERS = "DiversePapers"
    RECENT_POPULAR_AUTHORS = "RecentPopularAuthors"
    LIFETIME_POPULAR_AUTHORS = "LifetimePopularAuthors"
    TOP_PUBLISHING_AUTHORS = "TopPublishingAuthors"
    RECENT_PROLIFIC_AUTHORS = "RecentProlificAuthors"
    DIVERSE_AUTHORS = "DiverseAuthors"
    YOUNG_POPULAR_AUTHORS = "YoungPopularAuthors"

    @classmethod
    def parse(cls, raw: str) -> "RankedListKind":
        folded = raw.replace("_", "").replace("-", "").lower()
        for kind in cls:
            if kind.value.lower() == folded:
                return kind
        raise InvalidRequest(f"unknown ranked list kind: {raw!r}")


@dataclass(frozen=True)
class RankedEntry:
    key: str
    score: float
    label: str


def _incoming(snapshot: CorpusSnapshot) -> dict[PaperId, list[PaperId]]:
    incoming: dict[PaperId, list[PaperId]] = defaultdict(list)
    for edge in snapshot.citation_edges:
        incoming[edge.cited].append(edge.citing)
    return incoming


def _citations_histogram(
    pids, incoming: dict[PaperId, list[PaperId]], snapshot: CorpusSnapshot
) -> YearHistogram:
    years = [
        snapshot.papers[citing].year for pid in pids for citing in incoming.get(pid, ())
    ]
    return YearHistogram.from_years(years)


def _aggregate_topic_weights(
    pids, assignments: Assignments
) -> tuple[tuple[str, str, float], ...]:
    """Sum assignment weights over papers and renormalize to 1. Papers are
    visited in id order so float accumulation is reproducible."""
    sums: dict[tuple[str, str], float] = defaultdict(float)
    for pid in sorted(pids):
        for a in assignments.get(pid, ()):
            sums[(a.category, a.subtopic)] += a.weight
    total = sum(sums.values())
    if total <= 0:
        return ()
    return tuple(
        (category, subtopic, weight / total)
        for (category, subtopic), weight in sorted(sums.items())
    )


def paper_stats(
    pid: PaperId,
    snapshot: CorpusSnapshot,
    assignments: Assignments,
    similar_k: int = 5,
) -> PaperStats:
    if pid not in snapshot.papers:
        raise UnknownPaper(f"no paper {pid}")
    record = snapshot.papers[pid]
    incoming = _incoming(snapshot)
    hist = _citations_histogram([pid], incoming, snapshot)
    return PaperStats(
        citations_by_year=hist,
        total_citations=hist.total,
        similar_papers=tuple(similar_papers(pid, similar_k, snapshot)),
        topic_distribution=assignments.get(pid, ()),
        mentioned_urls=record.url_mentions,
        pdf_link=record.pdf_url,
    )


def _tfidf_vectors(snapshot: CorpusSnapshot) -> dict[PaperId, dict[str, float]]:
    counts = {
        pid: Counter(tokenize(record.title + " " + (record.abstract or "")))
        for pid, record in snapshot.papers.items()
    }
    df = Counter(term for c in counts.values() for term in c)
    n = len(counts)
    return {
        pid: {term: tf * math.log(n / df[term]) for term, tf in c.items()}
        for pid, c in counts.items()
    }


def _cosine(a: dict[str, float], b: dict[str, float]) -> float:
    if len(b) < len(a):
        a, b = b, a
    dot = sum(w * b[t] for t, w in a.items() if t in b)
    norm_a = math.sqrt(sum(w * w for w in a.values()))
    norm_b = math.sqrt(sum(w * w for w in b.values()))
    if norm_a == 0 or norm_b == 0:
        return 0.0
    return dot / (norm_a * norm_b)


def similar_papers(
    pid: PaperId, k: int, snapshot: CorpusSnapshot
) -> list[tuple[PaperId, float]]:
    """Top-k by TF-IDF cosine over title+abstract, ties by ascending id."""
    if pid not in snapshot.papers:
        raise UnknownPaper(f"no paper {pid}")
    vectors = _tfidf_vectors(snapshot)
    target = vectors[pid]
    scored = [
        (other, _cosine(target, vec)) for other, vec in vectors.items() if other != pid
    ]
    scored.sort(key=lambda item: (-item[1], item[0]))
    return scored[:k]


def author_stats(
    key: str, snapshot: CorpusSnapshot, assignments: Assignments
) -> AuthorStats:
    author = snapshot.authors.get(key)
    if author is None:
        raise UnknownAuthor(f"no author {key!r}")
    incoming = _incoming(snapshot)
    pids = sorted(author.paper_ids)
    venue_counts = Counter(snapshot.papers[pid].venue_key for pid in pids)
    return AuthorStats(
        publications_by_year=YearHistogram.from_years(
            snapshot.papers[pid].year for pid in pids
        ),
        citations_by_year=_citations_histogram(pids, incoming, snapshot),
        topic_distribution=_aggregate_topic_weights(pids, assignments),
        venue_preference=tuple(
            sorted(venue_counts.items(), key=lambda kv: (-kv[1], kv[0]))
        ),
    )


def venue_stats(
    key: str,
    snapshot: CorpusSnapshot,
    assignments: Assignments,
    now_year: int | None = None,
) -> VenueStats:
    venue = snapshot.venues.get(key)
    if venue is None:
        raise UnknownVenue(f"no venue {key!r}")
    incoming = _incoming(snapshot)
    pids = sorted(pid for ids in venue.papers_by_year.values() for pid in ids)
    members = set(pids)

    citing_flows: Counter[str] = Counter()
    cited_flows: Counter[str] = Counter()
    for edge in snapshot.citation_edges:
        if edge.cited in members:
            citing_flows[snapshot.papers[edge.citing].venue_key] += 1
        if edge.citing in members:
            cited_flows[snapshot.papers[edge.cited].venue_key] += 1

    author_counts: Counter[str] = Counter()
    for pid in pids:
        for name in snapshot.papers[pid].authors:
            author_counts[normalize_author_name(name)] += 1

    topic_shift: dict[int, tuple[tuple[str, str, float], ...]] = {}
    for year, ids in venue.papers_by_year.items():
        if now_year is not None and year > now_year:
            continue
        topic_shift[year] = _aggregate_topic_weights(ids, assignments)

    return VenueStats(
        publications_by_year=venue.year_histogram(),
        citations_by_year=_citations_histogram(pids, incoming, snapshot),
        topic_distribution=_aggregate_topic_weights(pids, assignments),
        papers_by_year=dict(venue.papers_by_year),
        top_citing_venues=tuple(
            sorted(citing_flows.items(), key=lambda kv: (-kv[1], kv[0]))
        ),
        top_cited_venues=tuple(
            sorted(cited_flows.items(), key=lambda kv: (-kv[1], kv[0]))
        ),
        top_authors=tuple(
            sorted(author_counts.items(), key=lambda kv: (-kv[1], kv[0]))
        ),
        topic_shift=topic_shift,
    )


def corpus_summary(snapshot: CorpusSnapshot) -> dict[str, int]:
    return {
        "papers": len(snapshot.papers),
        "authors": len(snapshot.authors),
        "venues": len(snapshot.venues),
        "citations": len(snapshot.citation_edges),
        "unresolved_references": snapshot.unresolved_reference_count,
    }


def ranked_list(
    kind: RankedListKind,
    snapshot: CorpusSnapshot,
    assignments: Assignments,
    now_year: int | None = None,
    k: int = 10,
    recent_years: int = RECENT_YEARS,
    seminal_age: int = SEMINAL_AGE,
    seminal_distinct_years: int = SEMINAL_DISTINCT_YEARS,
) -> list[RankedEntry]:
    """Every "popular/seminal/diverse" list, one scoring rule per kind.

    ``now_year`` defaults to the newest publication year in the snapshot so
    that recency windows stay meaningful on historical corpora.
    """
    if not snapshot.papers:
        return []
    if now_year is None:
        now_year = max(r.year for r in snapshot.papers.values())
    recent_floor = now_year - recent_years
    incoming = _incoming(snapshot)

    def total_citations(pid: PaperId) -> int:
        return len(incoming.get(pid, ()))

    entries: list[RankedEntry] = []

    if kind is RankedListKind.RECENT_POPULAR_PAPERS:
        entries = [
            RankedEntry(pid.canonical, float(total_citations(pid)), record.title)
            for pid, record in snapshot.papers.items()
            if record.year >= recent_floor
        ]
    elif kind is RankedListKind.SURVEY_PAPERS:
        entries = [
            RankedEntry(pid.canonical, float(total_citations(pid)), record.title)
            for pid, record in snapshot.papers.items()
            if SURVEY_TITLE_TOKENS & set(tokenize(record.title))
        ]
    elif kind is RankedListKind.SEMINAL_PAPERS:
        for pid, record in snapshot.papers.items():
            if now_year - record.year < seminal_age:
                continue
            citing_years = {snapshot.papers[c].year for c in incoming.get(pid, ())}
            if len(citing_years) < seminal_distinct_years:
                continue
            entries.append(
                RankedEntry(pid.canonical, float(total_citations(pid)), record.title)
            )
    elif kind is RankedListKind.DIVERSE_PAPERS:
        entries = [
            RankedEntry(
                pid.canonical,
                diversity_entropy(assignments.get(pid, ())),
                record.title,
            )
            for pid, record in snapshot.papers.items()
        ]
    elif kind is RankedListKind.RECENT_POPULAR_AUTHORS:
        entries = [
            RankedEntry(
                key,
                float(
                    sum(
                        total_citations(pid)
                        for pid in author.paper_ids
                        if snapshot.papers[pid].year >= recent_floor
                    )
                ),
                author.display_name,
            )
            for key, author in snapshot.authors.items()
        ]
    elif kind is RankedListKind.LIFETIME_POPULAR_AUTHORS:
        entries = [
            RankedEntry(
                key,
                float(sum(total_citations(pid) for pid in author.paper_ids)),
                author.display_name,
            )
            for key, author in snapshot.authors.items()
        ]
    elif kind is RankedListKind.TOP_PUBLISHING_AUTHORS:
        entries = [
            RankedEntry(key, float(len(author.paper_ids)), author.display_name)
            for key, author in snapshot.authors.items()
        ]
    elif kind is RankedListKind.RECENT_PROLIFIC_AUTHORS:
        entries = [
            RankedEntry(
                key,
                float(
                    sum(
                        1
                        for pid in author.paper_ids
                        if snapshot.papers[pid].year >= recent_floor
                    )
                ),
                author.display_name,
            )
            for key, author in snapshot.authors.items()
        ]
    elif kind is RankedListKind.DIVERSE_AUTHORS:
        entries = [
            RankedEntry(
                key,
                entropy_of_weights(
                    w for _, _, w in _aggregate_topic_weights(author.paper_ids, assignments)
                ),
                author.display_name,
            )
            for key, author in snapshot.authors.items()
        ]
    elif kind is RankedListKind.YOUNG_POPULAR_AUTHORS:
        entries = [
            RankedEntry(
                key,
                float(sum(total_citations(pid) for pid in author.paper_ids)),
                author.display_name,
            )
            for key, author in snapshot.authors.items()
            if author.first_year >= recent_floor
        ]

    entries.sort(key=lambda e: (-e.score, e.key))
    return entries[:k]
