"""Pydantic request/response models for the REST API."""

from __future__ import annotations

from pydantic import BaseModel

from ..corpus import YearHistogram


class Histogram(BaseModel):
    entries: dict[int, int]
    total: int

    @classmethod
    def from_hist(cls, h: YearHistogram) -> "Histogram":
        return cls(entries=h.entries, total=h.total)


class ErrorBody(BaseModel):
    error_code: str
    message: str


class SummaryResponse(BaseModel):
    version: int
    papers: int
    authors: int
    venues: int
    citations: int
    unresolved_references: int


class SearchHit(BaseModel):
    key: str
    score: float
    matched_terms: list[str]
    label: str
    snippet: str | None = None


class SearchResponse(BaseModel):
    version: int
    query: str
    domain: str
    total_hits: int
    page: int
    page_size: int
    hits: list[SearchHit]


class NgramResponse(BaseModel):
    version: int
    phrase: str
    year_from: int
    year_to: int
    values: dict[int, float]


class TopicWeight(BaseModel):
    category: str
    subtopic: str
    weight: float
    match_count: int | None = None


class SimilarPaper(BaseModel):
    id: str
    title: str
    similarity: float


class PaperStatsResponse(BaseModel):
    version: int
    id: str
    title: str
    authors: list[str]
    venue: str
    venue_key: str
    year: int
    abstract: str | None
    pdf_link: str | None
    total_citations: int
    citations_by_year: Histogram
    similar_papers: list[SimilarPaper]
    topic_distribution: list[TopicWeight]
    mentioned_urls: list[str]


class VenueCount(BaseModel):
    venue: str
    count: int


class AuthorStatsResponse(BaseModel):
    version: int
    key: str
    display_name: str
    first_year: int
    last_year: int
    paper_count: int
    publications_by_year: Histogram
    citations_by_year: Histogram
    topic_distribution: list[TopicWeight]
    venue_preference: list[VenueCount]


class AuthorCount(BaseModel):
    author: str
    count: int


class VenueStatsResponse(BaseModel):
    version: int
    key: str
    display_name: str
    publications_by_year: Histogram
    citations_by_year: Histogram
    topic_distribution: list[TopicWeight]
    papers_by_year: dict[int, list[str]]
    top_citing_venues: list[VenueCount]
    top_cited_venues: list[VenueCount]
    top_authors: list[AuthorCount]
    topic_shift: dict[int, list[TopicWeight]]


class TaxonomyResponse(BaseModel):
    version: int
    categories: dict[str, dict[str, list[str]]]


class TopicDistributionResponse(BaseModel):
    version: int
    category: str
    subtopic: str
    papers_by_year: Histogram
    authors_by_year: Histogram


class TimelineItem(BaseModel):
    category: str
    subtopic: str
    first_year: int


class TimelineResponse(BaseModel):
    version: int
    entries: list[TimelineItem]


class RankedItem(BaseModel):
    key: str
    score: float
    label: str


class RankedListResponse(BaseModel):
    version: int
    kind: str
    entries: list[RankedItem]


class TldCount(BaseModel):
    suffix: str
    count: int


class SubdomainCount(BaseModel):
    host: str
    count: int
    papers: list[str]


class UrlCount(BaseModel):
    url: str
    count: int


class UrlTopResponse(BaseModel):
    version: int
    top_tlds: list[TldCount]
    top_subdomains: list[SubdomainCount]
    top_urls_per_category: dict[str, list[UrlCount]]


class UrlDomainResponse(BaseModel):
    version: int
    domain: str
    total: int
    usage_by_year: Histogram


class ReingestResponse(BaseModel):
    version: int
    previous_version: int
    papers: int
