/** Response shapes of the corpus exploration API. Year-keyed maps arrive
 * with string keys, as JSON objects always do. */

export interface Histogram {
  entries: Record<string, number>;
  total: number;
}

export interface SummaryResponse {
  version: number;
  papers: number;
  authors: number;
  venues: number;
  citations: number;
  unresolved_references: number;
}

export interface SearchHit {
  key: string;
  score: number;
  matched_terms: string[];
  label: string;
  snippet: string | null;
}

export interface SearchResponse {
  version: number;
  query: string;
  domain: string;
  total_hits: number;
  page: number;
  page_size: number;
  hits: SearchHit[];
}

export interface NgramResponse {
  version: number;
  phrase: string;
  year_from: number;
  year_to: number;
  values: Record<string, number>;
}

export interface TopicWeight {
  category: string;
  subtopic: string;
  weight: number;
  match_count: number | null;
}

export interface SimilarPaper {
  id: string;
  title: string;
  similarity: number;
}

export interface PaperResponse {
  version: number;
  id: string;
  title: string;
  authors: string[];
  venue: string;
  venue_key: string;
  year: number;
  abstract: string | null;
  pdf_link: string | null;
  total_citations: number;
  citations_by_year: Histogram;
  similar_papers: SimilarPaper[];
  topic_distribution: TopicWeight[];
  mentioned_urls: string[];
}

export interface VenueCount {
  venue: string;
  count: number;
}

export interface AuthorResponse {
  version: number;
  key: string;
  display_name: string;
  first_year: number;
  last_year: number;
  paper_count: number;
  publications_by_year: Histogram;
  citations_by_year: Histogram;
  topic_distribution: TopicWeight[];
  venue_preference: VenueCount[];
}

export interface AuthorCount {
  author: string;
  count: number;
}

export interface VenueResponse {
  version: number;
  key: string;
  display_name: string;
  publications_by_year: Histogram;
  citations_by_year: Histogram;
  topic_distribution: TopicWeight[];
  papers_by_year: Record<string, string[]>;
  top_citing_venues: VenueCount[];
  top_cited_venues: VenueCount[];
  top_authors: AuthorCount[];
  topic_shift: Record<string, TopicWeight[]>;
}

export interface TaxonomyResponse {
  version: number;
  categories: Record<string, Record<string, string[]>>;
}

export interface TopicDistributionResponse {
  version: number;
  category: string;
  subtopic: string;
  papers_by_year: Histogram;
  authors_by_year: Histogram;
}

export interface TimelineItem {
  category: string;
  subtopic: string;
  first_year: number;
}

export interface TimelineResponse {
  version: number;
  entries: TimelineItem[];
}

export interface RankedItem {
  key: string;
  score: number;
  label: string;
}

export interface RankedListResponse {
  version: number;
  kind: string;
  entries: RankedItem[];
}

export interface TldCount {
  suffix: string;
  count: number;
}

export interface SubdomainCount {
  host: string;
  count: number;
  papers: string[];
}

export interface UrlCount {
  url: string;
  count: number;
}

export interface UrlTopResponse {
  version: number;
  top_tlds: TldCount[];
  top_subdomains: SubdomainCount[];
  top_urls_per_category: Record<string, UrlCount[]>;
}

export interface UrlDomainResponse {
  version: number;
  domain: string;
  total: number;
  usage_by_year: Histogram;
}

export interface ErrorBody {
  error_code: string;
  message: string;
}
