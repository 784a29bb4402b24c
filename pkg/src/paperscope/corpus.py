"""Canonical domain types plus the identifier and name normalization rules
that make records comparable across the whole engine.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass

from .errors import EmptyName, MalformedId

MIN_YEAR = 1965
YEAR_PIVOT = 65

_ID_RE = re.compile(r"^([A-Z])([0-9]{2})-([0-9]{4})$")
# Loose form used to scan for ids embedded inside reference strings.
ID_SCAN_RE = re.compile(r"[A-Z][0-9]{2}-[0-9]{4}")


@dataclass(frozen=True, order=True)
class PaperId:
    """Eight-character article identifier: collection letter, two-digit year
    code, and a four-digit sequence number ("P19-1001")."""

    collection: str
    year_code: int
    sequence: int

    @property
    def canonical(self) -> str:
        return f"{self.collection}{self.year_code:02d}-{self.sequence:04d}"

    def __str__(self) -> str:
        return self.canonical


def parse_paper_id(s: str) -> PaperId:
    """Parse the canonical 8-character id form, rejecting anything else."""
    m = _ID_RE.match(s)
    if not m:
        raise MalformedId(f"not a valid paper id: {s!r}")
    return PaperId(m.group(1), int(m.group(2)), int(m.group(3)))


def year_from_id(paper_id: PaperId) -> int:
    """Expand the two-digit year code. The corpus starts in 1965, so codes
    >= 65 belong to the 1900s and everything below to the 2000s."""
    if paper_id.year_code >= YEAR_PIVOT:
        return 1900 + paper_id.year_code
    return 2000 + paper_id.year_code


_INITIAL_DOT_RE = re.compile(r"\b(\w)\.")
_WS_RE = re.compile(r"\s+")


def normalize_author_name(name: str) -> str:
    """Reduce an author display name to its comparison key.

    Lowercases, strips diacritics to base letters, drops periods after
    single-letter initials, and collapses whitespace. No reordering: a
    "Family, Given" spelling keeps its comma and stays distinct.
    """
    s = unicodedata.normalize("NFKD", name)
    s = "".join(ch for ch in s if not unicodedata.combining(ch))
    s = s.lower()
    s = _INITIAL_DOT_RE.sub(r"\1", s)
    s = _WS_RE.sub(" ", s).strip()
    if not s:
        raise EmptyName(f"author name is empty after normalization: {name!r}")
    return s


def normalize_venue_key(venue: str) -> str:
    return venue.strip().lower()


@dataclass(frozen=True)
class YearHistogram:
    """Mapping year -> non-negative count; the shape of every temporal stat."""

    entries: dict[int, int]
    total: int

    @classmethod
    def from_counts(cls, counts: dict[int, int]) -> "YearHistogram":
        entries = {y: c for y, c in sorted(counts.items()) if c}
        return cls(entries=entries, total=sum(entries.values()))

    @classmethod
    def from_years(cls, years) -> "YearHistogram":
        counts: dict[int, int] = {}
        for y in years:
            counts[y] = counts.get(y, 0) + 1
        return cls.from_counts(counts)


EMPTY_HISTOGRAM = YearHistogram(entries={}, total=0)


@dataclass(frozen=True)
class PaperRecord:
    """One indexed article: metadata, attached text, and raw mentions."""

    id: PaperId
    title: str
    authors: tuple[str, ...]
    venue: str
    year: int
    abstract: str | None = None
    full_text: str | None = None
    reference_strings: tuple[str, ...] = ()
    url_mentions: tuple[str, ...] = ()
    pdf_url: str | None = None

    @property
    def venue_key(self) -> str:
        return normalize_venue_key(self.venue)


@dataclass(frozen=True)
class AuthorRecord:
    key: str
    display_name: str
    paper_ids: frozenset[PaperId]
    first_year: int
    last_year: int


@dataclass(frozen=True)
class VenueRecord:
    key: str
    display_name: str
    papers_by_year: dict[int, tuple[PaperId, ...]]

    def year_histogram(self) -> YearHistogram:
        return YearHistogram.from_counts(
            {y: len(ids) for y, ids in self.papers_by_year.items()}
        )


@dataclass(frozen=True)
class CitationEdge:
    citing: PaperId
    cited: PaperId


@dataclass(frozen=True)
class CorpusSnapshot:
    """Immutable, versioned view of the whole corpus plus its citation graph.

    Safe for unrestricted concurrent reads; construction is single-writer
    and the version strictly increases across rebuilds.
    """

    papers: dict[PaperId, PaperRecord]
    authors: dict[str, AuthorRecord]
    venues: dict[str, VenueRecord]
    citation_edges: frozenset[CitationEdge]
    unresolved_reference_count: int
    version: int
    built_at: str


def validate_snapshot(snapshot: CorpusSnapshot) -> None:
    """Assert the cross-reference invariants; raises ValueError on breakage.

    Cheap at expected corpus scales, so runs after every build.
    """
    papers = snapshot.papers
    for edge in snapshot.citation_edges:
        if edge.citing not in papers or edge.cited not in papers:
            raise ValueError(f"citation edge {edge} points outside the snapshot")
        if edge.citing == edge.cited:
            raise ValueError(f"self-citation edge {edge}")
    for key, author in snapshot.authors.items():
        if not author.paper_ids:
            raise ValueError(f"author {key!r} has no papers")
        years = [papers[pid].year for pid in author.paper_ids]
        if author.first_year != min(years) or author.last_year != max(years):
            raise ValueError(f"author {key!r} year span is inconsistent")
        for pid in author.paper_ids:
            names = {normalize_author_name(a) for a in papers[pid].authors}
            if key not in names:
                raise ValueError(f"author {key!r} not listed on {pid}")
    for pid, record in papers.items():
        for name in record.authors:
            key = normalize_author_name(name)
            if key not in snapshot.authors or pid not in snapshot.authors[key].paper_ids:
                raise ValueError(f"paper {pid} missing from author {key!r}")
        vkey = record.venue_key
        if vkey not in snapshot.venues:
            raise ValueError(f"venue {vkey!r} of {pid} missing")
    for vkey, venue in snapshot.venues.items():
        for year, ids in venue.papers_by_year.items():
            for pid in ids:
                if pid not in papers:
                    raise ValueError(f"venue {vkey!r} lists unknown paper {pid}")
                if papers[pid].year != year:
                    raise ValueError(f"venue {vkey!r} lists {pid} under wrong year")
