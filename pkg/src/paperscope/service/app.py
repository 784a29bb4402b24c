"""REST API over the active snapshot.

Every handler captures ``state.active`` once, so a response is always
computed from a single snapshot version even while a re-ingest swap runs,
and every body carries that version.
"""

from __future__ import annotations

import logging
import threading

from fastapi import FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .. import analytics
from ..corpus import normalize_author_name, normalize_venue_key, parse_paper_id
from ..errors import PaperscopeError, UnknownPaper
from ..index import PAPER_FIELD_WEIGHTS, SearchDomain, ngram_trend, search, snippet
from ..topics import first_occurrence_timeline, topic_year_distribution
from ..urls import top_tables, url_usage_by_year
from . import schemas
from .state import ActiveBundle, ServiceState

logger = logging.getLogger(__name__)


def _topic_weights(assigned) -> list[schemas.TopicWeight]:
    return [
        schemas.TopicWeight(
            category=a.category,
            subtopic=a.subtopic,
            weight=a.weight,
            match_count=a.match_count,
        )
        for a in assigned
    ]


def _aggregated_weights(rows) -> list[schemas.TopicWeight]:
    return [
        schemas.TopicWeight(category=c, subtopic=s, weight=w) for c, s, w in rows
    ]


def create_app(state: ServiceState) -> FastAPI:
    app = FastAPI(title="paperscope", docs_url="/api/docs", openapi_url="/api/openapi.json")
    app.state.service = state

    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(PaperscopeError)
    async def handle_engine_error(request: Request, exc: PaperscopeError):
        return JSONResponse(
            status_code=exc.http_status,
            content={"error_code": exc.error_code, "message": str(exc)},
        )

    @app.exception_handler(RequestValidationError)
    async def handle_validation_error(request: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={"error_code": "invalid_request", "message": str(exc.errors())},
        )

    config = state.config

    @app.get("/api/corpus/summary", response_model=schemas.SummaryResponse)
    def corpus_summary():
        bundle = state.active
        summary = analytics.corpus_summary(bundle.snapshot)
        return schemas.SummaryResponse(version=bundle.version, **summary)

    @app.get("/api/search", response_model=schemas.SearchResponse)
    def search_endpoint(
        q: str = "",
        domain: str = "Papers",
        page: int = Query(default=1, ge=1),
        page_size: int = Query(default=None, ge=1),
    ):
        bundle = state.active
        parsed_domain = SearchDomain.parse(domain)
        size = page_size or config.page_size
        weights = None
        if parsed_domain is SearchDomain.PAPERS:
            weights = (
                (PAPER_FIELD_WEIGHTS[0][0], config.weight_title),
                (PAPER_FIELD_WEIGHTS[1][0], config.weight_abstract),
                (PAPER_FIELD_WEIGHTS[2][0], config.weight_full_text),
            )
        total, hits = search(
            bundle.index,
            q,
            parsed_domain,
            page=page,
            page_size=size,
            k1=config.bm25_k1,
            b=config.bm25_b,
            field_weights=weights,
        )
        out = []
        for hit in hits:
            label = hit.key
            snip = None
            if parsed_domain is SearchDomain.PAPERS:
                record = bundle.snapshot.papers[parse_paper_id(hit.key)]
                label = record.title
                snip = snippet(
                    [record.title, record.abstract or "", record.full_text or ""],
                    hit.matched_terms,
                )
            elif parsed_domain is SearchDomain.AUTHORS:
                label = bundle.snapshot.authors[hit.key].display_name
            elif parsed_domain is SearchDomain.VENUES:
                label = bundle.snapshot.venues[hit.key].display_name
            out.append(
                schemas.SearchHit(
                    key=hit.key,
                    score=hit.score,
                    matched_terms=sorted(hit.matched_terms),
                    label=label,
                    snippet=snip,
                )
            )
        return schemas.SearchResponse(
            version=bundle.version,
            query=q,
            domain=parsed_domain.value,
            total_hits=total,
            page=page,
            page_size=size,
            hits=out,
        )

    @app.get("/api/ngrams", response_model=schemas.NgramResponse)
    def ngrams(
        phrase: str = "",
        year_from: int = Query(default=None, alias="from"),
        year_to: int = Query(default=None, alias="to"),
    ):
        bundle = state.active
        years = sorted(bundle.index.paper_years.values())
        lo = year_from if year_from is not None else (years[0] if years else 1965)
        hi = year_to if year_to is not None else (years[-1] if years else 1965)
        values = ngram_trend(bundle.index, phrase, lo, hi)
        return schemas.NgramResponse(
            version=bundle.version, phrase=phrase, year_from=lo, year_to=hi, values=values
        )

    @app.get("/api/papers/{paper_id}", response_model=schemas.PaperStatsResponse)
    def paper_page(paper_id: str):
        bundle = state.active
        try:
            pid = parse_paper_id(paper_id)
        except PaperscopeError as exc:
            raise UnknownPaper(f"no paper {paper_id!r}") from exc
        stats = analytics.paper_stats(
            pid, bundle.snapshot, bundle.assignments, similar_k=config.similar_k
        )
        record = bundle.snapshot.papers[pid]
        return schemas.PaperStatsResponse(
            version=bundle.version,
            id=pid.canonical,
            title=record.title,
            authors=list(record.authors),
            venue=record.venue,
            venue_key=record.venue_key,
            year=record.year,
            abstract=record.abstract,
            pdf_link=stats.pdf_link,
            total_citations=stats.total_citations,
            citations_by_year=schemas.Histogram.from_hist(stats.citations_by_year),
            similar_papers=[
                schemas.SimilarPaper(
                    id=other.canonical,
                    title=bundle.snapshot.papers[other].title,
                    similarity=sim,
                )
                for other, sim in stats.similar_papers
            ],
            topic_distribution=_topic_weights(stats.topic_distribution),
            mentioned_urls=list(stats.mentioned_urls),
        )

    @app.get("/api/authors/{key}", response_model=schemas.AuthorStatsResponse)
    def author_page(key: str):
        bundle = state.active
        akey = normalize_author_name(key)
        stats = analytics.author_stats(akey, bundle.snapshot, bundle.assignments)
        author = bundle.snapshot.authors[akey]
        return schemas.AuthorStatsResponse(
            version=bundle.version,
            key=akey,
            display_name=author.display_name,
            first_year=author.first_year,
            last_year=author.last_year,
            paper_count=len(author.paper_ids),
            publications_by_year=schemas.Histogram.from_hist(stats.publications_by_year),
            citations_by_year=schemas.Histogram.from_hist(stats.citations_by_year),
            topic_distribution=_aggregated_weights(stats.topic_distribution),
            venue_preference=[
                schemas.VenueCount(venue=v, count=c) for v, c in stats.venue_preference
            ],
        )

    @app.get("/api/venues/{key}", response_model=schemas.VenueStatsResponse)
    def venue_page(key: str):
        bundle = state.active
        vkey = normalize_venue_key(key)
        stats = analytics.venue_stats(vkey, bundle.snapshot, bundle.assignments)
        venue = bundle.snapshot.venues[vkey]
        return schemas.VenueStatsResponse(
            version=bundle.version,
            key=vkey,
            display_name=venue.display_name,
            publications_by_year=schemas.Histogram.from_hist(stats.publications_by_year),
            citations_by_year=schemas.Histogram.from_hist(stats.citations_by_year),
            topic_distribution=_aggregated_weights(stats.topic_distribution),
            papers_by_year={
                y: [p.canonical for p in ids] for y, ids in stats.papers_by_year.items()
            },
            top_citing_venues=[
                schemas.VenueCount(venue=v, count=c) for v, c in stats.top_citing_venues
            ],
            top_cited_venues=[
                schemas.VenueCount(venue=v, count=c) for v, c in stats.top_cited_venues
            ],
            top_authors=[
                schemas.AuthorCount(author=a, count=c) for a, c in stats.top_authors
            ],
            topic_shift={
                y: _aggregated_weights(rows) for y, rows in stats.topic_shift.items()
            },
        )

    @app.get("/api/topics", response_model=schemas.TaxonomyResponse)
    def taxonomy_endpoint():
        bundle = state.active
        return schemas.TaxonomyResponse(
            version=bundle.version, categories=bundle.taxonomy.raw()
        )

    @app.get(
        "/api/topics/timeline", response_model=schemas.TimelineResponse
    )
    def timeline():
        bundle = state.active
        entries = first_occurrence_timeline(
            bundle.taxonomy, bundle.snapshot, bundle.assignments
        )
        return schemas.TimelineResponse(
            version=bundle.version,
            entries=[
                schemas.TimelineItem(
                    category=e.category, subtopic=e.subtopic, first_year=e.first_year
                )
                for e in entries
            ],
        )

    @app.get(
        "/api/topics/{category}/{subtopic}",
        response_model=schemas.TopicDistributionResponse,
    )
    def topic_distribution(category: str, subtopic: str):
        bundle = state.active
        papers_hist = topic_year_distribution(
            category, subtopic, bundle.taxonomy, bundle.snapshot, bundle.assignments
        )
        authors_hist = topic_year_distribution(
            category,
            subtopic,
            bundle.taxonomy,
            bundle.snapshot,
            bundle.assignments,
            entity="authors",
        )
        return schemas.TopicDistributionResponse(
            version=bundle.version,
            category=category,
            subtopic=subtopic,
            papers_by_year=schemas.Histogram.from_hist(papers_hist),
            authors_by_year=schemas.Histogram.from_hist(authors_hist),
        )

    @app.get("/api/lists/{kind}", response_model=schemas.RankedListResponse)
    def lists(kind: str, k: int = Query(default=10, ge=1)):
        bundle = state.active
        parsed = analytics.RankedListKind.parse(kind)
        entries = analytics.ranked_list(
            parsed,
            bundle.snapshot,
            bundle.assignments,
            k=k,
            recent_years=config.recent_years,
            seminal_age=config.seminal_age,
            seminal_distinct_years=config.seminal_distinct_years,
        )
        return schemas.RankedListResponse(
            version=bundle.version,
            kind=parsed.value,
            entries=[
                schemas.RankedItem(key=e.key, score=e.score, label=e.label)
                for e in entries
            ],
        )

    @app.get("/api/urls/top", response_model=schemas.UrlTopResponse)
    def urls_top(k: int = Query(default=10, ge=1)):
        bundle = state.active
        tables = top_tables(bundle.snapshot, k, bundle.suffixes, bundle.rules)
        return schemas.UrlTopResponse(
            version=bundle.version,
            top_tlds=[schemas.TldCount(suffix=s, count=c) for s, c in tables.top_tlds],
            top_subdomains=[
                schemas.SubdomainCount(host=h, count=c, papers=list(papers))
                for h, c, papers in tables.top_subdomains
            ],
            top_urls_per_category={
                category: [schemas.UrlCount(url=u, count=c) for u, c in rows]
                for category, rows in tables.top_urls_per_category.items()
            },
        )

    @app.get("/api/urls/{domain}", response_model=schemas.UrlDomainResponse)
    def url_domain(domain: str):
        bundle = state.active
        hist = url_usage_by_year(domain, bundle.snapshot, bundle.suffixes)
        return schemas.UrlDomainResponse(
            version=bundle.version,
            domain=domain.lower(),
            total=hist.total,
            usage_by_year=schemas.Histogram.from_hist(hist),
        )

    @app.post("/api/admin/reingest", response_model=schemas.ReingestResponse)
    def admin_reingest():
        previous = state.active.version
        bundle = state.trigger_reingest()
        return schemas.ReingestResponse(
            version=bundle.version,
            previous_version=previous,
            papers=len(bundle.snapshot.papers),
        )

    if config.ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=config.ui_dir, html=True), name="ui")

    return app


def create_app_from_config(config) -> FastAPI:
    state = ServiceState.from_config(config)
    app = create_app(state)
    if config.reingest_interval_seconds:
        _start_reingest_timer(state, config.reingest_interval_seconds)
    return app


def _start_reingest_timer(state: ServiceState, interval: int) -> None:
    def loop():
        import time

        while True:
            time.sleep(interval)
            try:
                state.trigger_reingest()
            except PaperscopeError as exc:
                logger.error("scheduled re-ingest failed: %s", exc)

    threading.Thread(target=loop, daemon=True, name="paperscope-reingest").start()
