/** Pure view renderers: API JSON in, HTML string out.
 *
 * The UI computes no statistics. Every number shown comes verbatim from a
 * response field, rendered through String(value) and duplicated into a
 * data-* attribute so contract tests can trace it byte-for-byte.
 */

import { barChart, esc, lineChart, weightBars } from "./charts.js";
import { formatRoute } from "./router.js";
import type {
  AuthorResponse,
  ErrorBody,
  Histogram,
  NgramResponse,
  PaperResponse,
  RankedListResponse,
  SearchResponse,
  SummaryResponse,
  TaxonomyResponse,
  TimelineResponse,
  TopicDistributionResponse,
  TopicWeight,
  UrlDomainResponse,
  UrlTopResponse,
  VenueResponse,
} from "./types.js";

function num(value: number | string, field: string): string {
  const text = String(value);
  return `<span class="num" data-field="${esc(field)}" data-value="${esc(text)}">${esc(text)}</span>`;
}

function link(href: string, label: string): string {
  return `<a href="${esc(href)}">${esc(label)}</a>`;
}

function histogramSection(title: string, hist: Histogram, name: string): string {
  return (
    `<section class="panel"><h3>${esc(title)} (total ${num(hist.total, `${name}.total`)})</h3>` +
    barChart(hist.entries, name) +
    `</section>`
  );
}

function topicTable(rows: TopicWeight[], name: string): string {
  return weightBars(
    rows.map((r) => ({ label: `${r.category} / ${r.subtopic}`, weight: r.weight })),
    name
  );
}

export function renderSummary(body: SummaryResponse): string {
  return (
    `<section class="panel"><h2>Corpus</h2><ul class="kv">` +
    `<li>papers: ${num(body.papers, "papers")}</li>` +
    `<li>authors: ${num(body.authors, "authors")}</li>` +
    `<li>venues: ${num(body.venues, "venues")}</li>` +
    `<li>citations: ${num(body.citations, "citations")}</li>` +
    `<li>unresolved references: ${num(body.unresolved_references, "unresolved_references")}</li>` +
    `</ul></section>`
  );
}

export function renderSearch(body: SearchResponse): string {
  const hits = body.hits
    .map((hit) => {
      const href =
        body.domain === "Papers"
          ? formatRoute({ kind: "paper", id: hit.key })
          : body.domain === "Authors"
            ? formatRoute({ kind: "author", key: hit.key })
            : body.domain === "Venues"
              ? formatRoute({ kind: "venue", key: hit.key })
              : body.domain === "FieldOfStudy"
                ? formatRoute({
                    kind: "topic",
                    category: hit.key.split("/")[0] ?? "",
                    subtopic: hit.key.split("/").slice(1).join("/"),
                  })
                : formatRoute({ kind: "url", domain: hit.key });
      return (
        `<li class="hit" data-key="${esc(hit.key)}" data-score="${esc(String(hit.score))}">` +
        link(href, hit.label) +
        ` <span class="score">score ${num(hit.score, "hit.score")}</span>` +
        (hit.snippet ? `<p class="snippet">${esc(hit.snippet)}</p>` : "") +
        `</li>`
      );
    })
    .join("");
  const empty = `<p class="empty">No results for this query.</p>`;
  return (
    `<section class="panel"><h2>${esc(body.domain)} results for &quot;${esc(body.query)}&quot;</h2>` +
    `<p>${num(body.total_hits, "total_hits")} hits, page ${num(body.page, "page")}</p>` +
    (body.hits.length ? `<ol class="hits">${hits}</ol>` : empty) +
    `</section>`
  );
}

export function renderPaper(body: PaperResponse): string {
  const authors = body.authors
    .map((name) => link(formatRoute({ kind: "author", key: name }), name))
    .join(", ");
  const similar = body.similar_papers
    .map(
      (s) =>
        `<li data-id="${esc(s.id)}" data-similarity="${esc(String(s.similarity))}">` +
        link(formatRoute({ kind: "paper", id: s.id }), s.title) +
        ` <span class="score">similarity ${num(s.similarity, "similar.similarity")}</span></li>`
    )
    .join("");
  const urls = body.mentioned_urls
    .map((u) => `<li><a href="${esc(u)}" rel="external">${esc(u)}</a></li>`)
    .join("");
  return (
    `<article class="entity">` +
    `<h2>${esc(body.title)}</h2>` +
    `<p class="meta">${esc(body.id)} · ${link(formatRoute({ kind: "venue", key: body.venue_key }), body.venue)} · ` +
    `${num(body.year, "year")} · ${authors}</p>` +
    (body.abstract ? `<p class="abstract">${esc(body.abstract)}</p>` : "") +
    (body.pdf_link ? `<p><a href="${esc(body.pdf_link)}" rel="external">PDF</a></p>` : "") +
    histogramSection(
      `Citations (${body.total_citations} total)`,
      body.citations_by_year,
      "citations_by_year"
    ) +
    `<section class="panel"><h3>Total citations: ${num(body.total_citations, "total_citations")}</h3></section>` +
    `<section class="panel"><h3>Topics</h3>${topicTable(body.topic_distribution, "topics")}</section>` +
    `<section class="panel"><h3>Similar papers</h3><ul>${similar}</ul></section>` +
    `<section class="panel"><h3>Mentioned URLs</h3><ul>${urls}</ul></section>` +
    `</article>`
  );
}

export function renderAuthor(body: AuthorResponse): string {
  const venues = body.venue_preference
    .map(
      (v) =>
        `<li data-venue="${esc(v.venue)}" data-count="${esc(String(v.count))}">` +
        link(formatRoute({ kind: "venue", key: v.venue }), v.venue) +
        `: ${num(v.count, "venue_preference.count")}</li>`
    )
    .join("");
  return (
    `<article class="entity">` +
    `<h2>${esc(body.display_name)}</h2>` +
    `<p class="meta">active ${num(body.first_year, "first_year")}–${num(body.last_year, "last_year")} · ` +
    `${num(body.paper_count, "paper_count")} papers</p>` +
    histogramSection("Publications", body.publications_by_year, "publications_by_year") +
    histogramSection("Citations", body.citations_by_year, "citations_by_year") +
    `<section class="panel"><h3>Topics</h3>${topicTable(body.topic_distribution, "topics")}</section>` +
    `<section class="panel"><h3>Venues</h3><ul>${venues}</ul></section>` +
    `</article>`
  );
}

export function renderVenue(body: VenueResponse): string {
  const flows = (rows: { venue: string; count: number }[], name: string) =>
    rows
      .map(
        (row) =>
          `<li data-venue="${esc(row.venue)}" data-count="${esc(String(row.count))}">` +
          link(formatRoute({ kind: "venue", key: row.venue }), row.venue) +
          `: ${num(row.count, `${name}.count`)}</li>`
      )
      .join("");
  const authors = body.top_authors
    .map(
      (row) =>
        `<li data-author="${esc(row.author)}" data-count="${esc(String(row.count))}">` +
        link(formatRoute({ kind: "author", key: row.author }), row.author) +
        `: ${num(row.count, "top_authors.count")}</li>`
    )
    .join("");
  const shiftYears = Object.keys(body.topic_shift).sort();
  const shift = shiftYears
    .map(
      (year) =>
        `<div class="shift-year" data-year="${esc(year)}"><h4>${esc(year)}</h4>` +
        topicTable(body.topic_shift[year], `topic_shift.${year}`) +
        `</div>`
    )
    .join("");
  const papersByYear = Object.keys(body.papers_by_year)
    .sort()
    .map(
      (year) =>
        `<li data-year="${esc(year)}">${esc(year)}: ` +
        body.papers_by_year[year]
          .map((pid) => link(formatRoute({ kind: "paper", id: pid }), pid))
          .join(", ") +
        `</li>`
    )
    .join("");
  return (
    `<article class="entity">` +
    `<h2>${esc(body.display_name)}</h2>` +
    histogramSection("Publications", body.publications_by_year, "publications_by_year") +
    histogramSection("Citations received", body.citations_by_year, "citations_by_year") +
    `<section class="panel"><h3>Topics</h3>${topicTable(body.topic_distribution, "topics")}</section>` +
    `<section class="panel"><h3>Top citing venues</h3><ul>${flows(body.top_citing_venues, "top_citing_venues")}</ul></section>` +
    `<section class="panel"><h3>Top cited venues</h3><ul>${flows(body.top_cited_venues, "top_cited_venues")}</ul></section>` +
    `<section class="panel"><h3>Top authors</h3><ul>${authors}</ul></section>` +
    `<section class="panel"><h3>Topic shift over the years</h3>${shift}</section>` +
    `<section class="panel"><h3>Papers by year</h3><ul>${papersByYear}</ul></section>` +
    `</article>`
  );
}

export function renderTopics(body: TaxonomyResponse): string {
  const categories = Object.keys(body.categories)
    .map((category) => {
      const subtopics = Object.keys(body.categories[category])
        .map(
          (name) =>
            `<li>${link(formatRoute({ kind: "topic", category, subtopic: name }), name)}` +
            ` <span class="triggers">${esc(body.categories[category][name].join(", "))}</span></li>`
        )
        .join("");
      return `<section class="panel"><h3>${esc(category)}</h3><ul>${subtopics}</ul></section>`;
    })
    .join("");
  return `<article class="entity"><h2>Field of study taxonomy</h2>${categories}</article>`;
}

export function renderTopicDistribution(body: TopicDistributionResponse): string {
  return (
    `<article class="entity">` +
    `<h2>${esc(body.category)} / ${esc(body.subtopic)}</h2>` +
    histogramSection("Papers per year", body.papers_by_year, "papers_by_year") +
    histogramSection("Distinct authors per year", body.authors_by_year, "authors_by_year") +
    `</article>`
  );
}

export function renderTimeline(body: TimelineResponse): string {
  const entries = body.entries
    .map(
      (e) =>
        `<li class="timeline-entry" data-first-year="${esc(String(e.first_year))}">` +
        `<span class="year">${num(e.first_year, "first_year")}</span> ` +
        link(
          formatRoute({ kind: "topic", category: e.category, subtopic: e.subtopic }),
          `${e.category} / ${e.subtopic}`
        ) +
        `</li>`
    )
    .join("");
  return (
    `<article class="entity"><h2>First occurrence of each subtopic</h2>` +
    `<ol class="timeline">${entries}</ol></article>`
  );
}

export function renderRankedList(body: RankedListResponse): string {
  const isAuthorList = body.kind.includes("Author");
  const entries = body.entries
    .map(
      (e) =>
        `<li data-key="${esc(e.key)}" data-score="${esc(String(e.score))}">` +
        link(
          isAuthorList
            ? formatRoute({ kind: "author", key: e.key })
            : formatRoute({ kind: "paper", id: e.key }),
          e.label
        ) +
        ` <span class="score">${num(e.score, "entry.score")}</span></li>`
    )
    .join("");
  return (
    `<article class="entity"><h2>${esc(body.kind)}</h2>` +
    (body.entries.length ? `<ol class="ranked">${entries}</ol>` : `<p class="empty">Empty list.</p>`) +
    `</article>`
  );
}

export function renderNgrams(body: NgramResponse): string {
  return (
    `<article class="entity">` +
    `<h2>Trend for &quot;${esc(body.phrase)}&quot; ${num(body.year_from, "year_from")}–${num(body.year_to, "year_to")}</h2>` +
    lineChart(body.values, "ngram_trend") +
    `</article>`
  );
}

export function renderUrlsTop(body: UrlTopResponse): string {
  const tlds = body.top_tlds
    .map(
      (t) =>
        `<li data-suffix="${esc(t.suffix)}" data-count="${esc(String(t.count))}">` +
        `${esc(t.suffix)}: ${num(t.count, "top_tlds.count")}</li>`
    )
    .join("");
  const hosts = body.top_subdomains
    .map(
      (s) =>
        `<li data-host="${esc(s.host)}" data-count="${esc(String(s.count))}">${esc(s.host)}: ` +
        `${num(s.count, "top_subdomains.count")} — ` +
        s.papers.map((pid) => link(formatRoute({ kind: "paper", id: pid }), pid)).join(", ") +
        `</li>`
    )
    .join("");
  const categories = Object.keys(body.top_urls_per_category)
    .map((category) => {
      const rows = body.top_urls_per_category[category]
        .map(
          (u) =>
            `<li data-url="${esc(u.url)}" data-count="${esc(String(u.count))}">` +
            `${esc(u.url)}: ${num(u.count, "category_url.count")}</li>`
        )
        .join("");
      return `<section class="panel"><h3>${esc(category)}</h3><ul>${rows || "<li class='empty'>none</li>"}</ul></section>`;
    })
    .join("");
  return (
    `<article class="entity"><h2>URL statistics</h2>` +
    `<section class="panel"><h3>Top-level domains</h3><ul>${tlds}</ul></section>` +
    `<section class="panel"><h3>Top hosts and their papers</h3><ul>${hosts}</ul></section>` +
    categories +
    `</article>`
  );
}

export function renderUrlDomain(body: UrlDomainResponse): string {
  return (
    `<article class="entity">` +
    `<h2>${esc(body.domain)}</h2>` +
    `<p>total usage: ${num(body.total, "total")}</p>` +
    histogramSection("Usage by year", body.usage_by_year, "usage_by_year") +
    `</article>`
  );
}

/** API failures render a message, never a blank screen. */
export function renderError(status: number, body: ErrorBody | null): string {
  const code = body?.error_code ?? "unreachable";
  const message = body?.message ?? "The service could not be reached.";
  return (
    `<section class="panel error" data-status="${esc(String(status))}" data-error-code="${esc(code)}">` +
    `<h2>${status === 404 ? "Not found" : "Request failed"}</h2>` +
    `<p>${esc(message)}</p></section>`
  );
}

export function renderStaleHint(renderedVersion: number, incomingVersion: number): string {
  return (
    `<div class="stale-hint" data-rendered-version="${esc(String(renderedVersion))}" ` +
    `data-incoming-version="${esc(String(incomingVersion))}">` +
    `The corpus was re-ingested (snapshot v${esc(String(incomingVersion))}); ` +
    `this view still shows v${esc(String(renderedVersion))}. Reload to refresh.</div>`
  );
}
