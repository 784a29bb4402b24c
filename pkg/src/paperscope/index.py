"""Positional, field-scoped inverted index with BM25 ranking and n-gram
trend queries.

The index is rebuilt from scratch for every snapshot, so ranking statistics
are never stale. It is immutable after build and safe for concurrent reads.
"""

from __future__ import annotations

import math
import re
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum

from .corpus import CorpusSnapshot
from .errors import BadPage, BadYearRange, EmptyQuery, InvalidRequest, PhraseTooLong

# Split on any non-alphanumeric character except intra-word hyphens and
# apostrophes; no stemming, no stopwords.
TOKEN_RE = re.compile(r"[^\W_]+(?:['-][^\W_]+)*")

BM25_K1 = 1.2
BM25_B = 0.75
MAX_NGRAM = 3

F_TITLE = "title"
F_ABSTRACT = "abstract"
F_FULL_TEXT = "full_text"
F_AUTHOR = "author"
F_VENUE = "venue"
F_URL = "url"
F_SUBTOPIC = "subtopic"

PAPER_FIELD_WEIGHTS = ((F_TITLE, 3.0), (F_ABSTRACT, 2.0), (F_FULL_TEXT, 1.0))


def tokenize(text: str) -> list[str]:
    """Lowercased tokens; the list index is the token's position."""
    return TOKEN_RE.findall(text.lower())


class SearchDomain(str, Enum):
    PAPERS = "Papers"
    AUTHORS = "Authors"
    VENUES = "Venues"
    URLS = "URLs"
    FIELD_OF_STUDY = "FieldOfStudy"

    @classmethod
    def parse(cls, raw: str) -> "SearchDomain":
        folded = raw.replace("_", "").replace("-", "").lower()
        for domain in cls:
            if domain.value.lower() == folded:
                return domain
        raise InvalidRequest(f"unknown search domain: {raw!r}")


# Which index fields serve each domain, with their default BM25 weights.
DOMAIN_FIELDS: dict[SearchDomain, tuple[tuple[str, float], ...]] = {
    SearchDomain.PAPERS: PAPER_FIELD_WEIGHTS,
    SearchDomain.AUTHORS: ((F_AUTHOR, 1.0),),
    SearchDomain.VENUES: ((F_VENUE, 1.0),),
    SearchDomain.URLS: ((F_URL, 1.0),),
    SearchDomain.FIELD_OF_STUDY: ((F_SUBTOPIC, 1.0),),
}


@dataclass(frozen=True)
class RankedHit:
    key: str
    score: float
    matched_terms: frozenset[str]


@dataclass
class InvertedIndex:
    # field -> term -> [(doc key, term frequency, positions)], sorted by key
    postings: dict[str, dict[str, list[tuple[str, int, tuple[int, ...]]]]] = field(
        default_factory=dict
    )
    # field -> doc key -> indexed token count
    doc_lengths: dict[str, dict[str, int]] = field(default_factory=dict)
    # domain value -> number of documents in that domain
    domain_sizes: dict[str, int] = field(default_factory=dict)
    # n -> year -> total number of n-grams over that year's full texts
    ngram_year_totals: dict[int, dict[int, int]] = field(default_factory=dict)
    # canonical paper id -> publication year
    paper_years: dict[str, int] = field(default_factory=dict)

    def avgdl(self, field_name: str, domain: SearchDomain) -> float:
        n = self.domain_sizes.get(domain.value, 0)
        if n == 0:
            return 0.0
        return sum(self.doc_lengths.get(field_name, {}).values()) / n


def build_index(
    snapshot: CorpusSnapshot,
    subtopics: tuple[tuple[str, str], ...] = (),
) -> InvertedIndex:
    """Index a snapshot. ``subtopics`` supplies (category, name) pairs for
    the FieldOfStudy domain; pass the active taxonomy's list."""
    raw: dict[str, dict[str, dict[str, list[int]]]] = defaultdict(
        lambda: defaultdict(dict)
    )
    lengths: dict[str, dict[str, int]] = defaultdict(dict)

    def add(field_name: str, key: str, text: str) -> None:
        tokens = tokenize(text)
        lengths[field_name][key] = len(tokens)
        for pos, tok in enumerate(tokens):
            raw[field_name][tok].setdefault(key, []).append(pos)

    ngram_totals: dict[int, dict[int, int]] = {n: {} for n in range(1, MAX_NGRAM + 1)}
    paper_years: dict[str, int] = {}
    urls: set[str] = set()
    for pid in sorted(snapshot.papers):
        record = snapshot.papers[pid]
        key = pid.canonical
        paper_years[key] = record.year
        add(F_TITLE, key, record.title)
        if record.abstract:
            add(F_ABSTRACT, key, record.abstract)
        if record.full_text:
            add(F_FULL_TEXT, key, record.full_text)
            n_tokens = lengths[F_FULL_TEXT][key]
            for n in range(1, MAX_NGRAM + 1):
                count = max(n_tokens - n + 1, 0)
                year_totals = ngram_totals[n]
                year_totals[record.year] = year_totals.get(record.year, 0) + count
        urls.update(record.url_mentions)

    for akey in sorted(snapshot.authors):
        add(F_AUTHOR, akey, snapshot.authors[akey].display_name)
    for vkey in sorted(snapshot.venues):
        add(F_VENUE, vkey, snapshot.venues[vkey].display_name)
    for url in sorted(urls):
        add(F_URL, url, url)
    for category, name in sorted(subtopics):
        add(F_SUBTOPIC, f"{category}/{name}", name)

    postings: dict[str, dict[str, list[tuple[str, int, tuple[int, ...]]]]] = {}
    for field_name, terms in raw.items():
        postings[field_name] = {
            term: sorted(
                (key, len(positions), tuple(positions))
                for key, positions in docs.items()
            )
            for term, docs in terms.items()
        }

    return InvertedIndex(
        postings=postings,
        doc_lengths={f: dict(d) for f, d in lengths.items()},
        domain_sizes={
            SearchDomain.PAPERS.value: len(snapshot.papers),
            SearchDomain.AUTHORS.value: len(snapshot.authors),
            SearchDomain.VENUES.value: len(snapshot.venues),
            SearchDomain.URLS.value: len(urls),
            SearchDomain.FIELD_OF_STUDY.value: len(subtopics),
        },
        ngram_year_totals=ngram_totals,
        paper_years=paper_years,
    )


def bm25_idf(n_docs: int, df: int) -> float:
    return math.log(1.0 + (n_docs - df + 0.5) / (df + 0.5))


def search(
    index: InvertedIndex,
    q: str,
    domain: SearchDomain,
    page: int = 1,
    page_size: int = 20,
    k1: float = BM25_K1,
    b: float = BM25_B,
    field_weights: tuple[tuple[str, float], ...] | None = None,
) -> tuple[int, list[RankedHit]]:
    """Ranked OR-semantics search; returns (total hits, requested page).

    Hits are ordered by (score desc, key asc); a page past the end is an
    empty list, not an error.
    """
    if page < 1 or page_size < 1:
        raise BadPage(f"page and page_size must be positive, got {page}/{page_size}")
    terms = sorted(set(tokenize(q)))
    if not terms:
        raise EmptyQuery("query has no tokens")

    fields = field_weights if field_weights is not None else DOMAIN_FIELDS[domain]
    n_docs = index.domain_sizes.get(domain.value, 0)
    if n_docs == 0:
        return 0, []

    scores: dict[str, float] = {}
    matched: dict[str, set[str]] = defaultdict(set)
    for term in terms:
        for field_name, weight in fields:
            plist = index.postings.get(field_name, {}).get(term)
            if not plist:
                continue
            lengths = index.doc_lengths[field_name]
            avgdl = index.avgdl(field_name, domain)
            idf = bm25_idf(n_docs, len(plist))
            for key, tf, _positions in plist:
                norm = tf + k1 * (1.0 - b + b * (lengths[key] / avgdl))
                scores[key] = scores.get(key, 0.0) + weight * idf * tf * (k1 + 1.0) / norm
                matched[key].add(term)

    ranked = sorted(scores.items(), key=lambda kv: (-kv[1], kv[0]))
    start = (page - 1) * page_size
    hits = [
        RankedHit(key=key, score=score, matched_terms=frozenset(matched[key]))
        for key, score in ranked[start : start + page_size]
    ]
    return len(ranked), hits


def ngram_trend(
    index: InvertedIndex, phrase: str, year_from: int, year_to: int
) -> dict[int, float]:
    """Relative frequency of an exact 1-3 token sequence per year, over all
    full texts; 0.0 for years with no tokens. Computed from positions."""
    tokens = tokenize(phrase)
    if not tokens:
        raise EmptyQuery("phrase has no tokens")
    if len(tokens) > MAX_NGRAM:
        raise PhraseTooLong(f"phrase has {len(tokens)} tokens, maximum is {MAX_NGRAM}")
    if year_from > year_to:
        raise BadYearRange(f"year_from {year_from} > year_to {year_to}")

    n = len(tokens)
    occurrences: dict[int, int] = defaultdict(int)
    full = index.postings.get(F_FULL_TEXT, {})
    first = full.get(tokens[0], [])
    rest = [
        {key: set(positions) for key, _tf, positions in full.get(tok, [])}
        for tok in tokens[1:]
    ]
    for key, _tf, positions in first:
        year = index.paper_years[key]
        if not year_from <= year <= year_to:
            continue
        count = 0
        for p in positions:
            if all(p + offset in table.get(key, ()) for offset, table in enumerate(rest, start=1)):
                count += 1
        occurrences[year] += count

    totals = index.ngram_year_totals.get(n, {})
    return {
        year: (occurrences[year] / totals[year] if totals.get(year) else 0.0)
        for year in range(year_from, year_to + 1)
    }


def snippet(record_fields: list[str], matched_terms: frozenset[str], radius: int = 10) -> str | None:
    """First matched position plus/minus ``radius`` tokens, scanning the
    given texts in order. Plumbing for search result display."""
    for text in record_fields:
        if not text:
            continue
        tokens = tokenize(text)
        for i, tok in enumerate(tokens):
            if tok in matched_terms:
                return " ".join(tokens[max(0, i - radius) : i + radius + 1])
    return None
