"""URL mention analytics: suffix-based domain decomposition, host
categorization, and the frequency tables over all mentions.

Mentions count with multiplicity throughout: a paper that links the same
resource twice relies on it twice.
"""

from __future__ import annotations

import json
from collections import Counter, defaultdict
from dataclasses import dataclass
from pathlib import Path
from urllib.parse import urlsplit

from .corpus import CorpusSnapshot, PaperId, YearHistogram
from .errors import MalformedRecord, UnparsableUrl

SUPPORTED_SCHEMES = frozenset({"http", "https", "ftp"})

# Miniature embedded suffix set with longest-match semantics; a deployment
# can load a fuller list from a file.
DEFAULT_SUFFIX_DATA = (
    "com", "org", "net", "edu", "gov", "io",
    "ac.uk", "co.uk", "edu.au", "ac.jp", "co.jp",
    "de", "fr", "cn", "in",
)

CATEGORIES = ("University", "DigitalLibrary", "Dataset", "ResearchGroup", "Other")

# Ordered host-pattern rules, first match wins; "Other" is the fallthrough.
DEFAULT_RULE_DATA = (
    ("aclanthology.org", "DigitalLibrary"),
    ("arxiv.org", "DigitalLibrary"),
    ("dl.acm.org", "DigitalLibrary"),
    ("ieeexplore.ieee.org", "DigitalLibrary"),
    ("semanticscholar.org", "DigitalLibrary"),
    ("kaggle.com", "Dataset"),
    ("zenodo.org", "Dataset"),
    ("huggingface.co", "Dataset"),
    ("data.gov", "Dataset"),
    ("research.google.com", "ResearchGroup"),
    ("research.microsoft.com", "ResearchGroup"),
    ("deepmind.com", "ResearchGroup"),
    ("edu", "University"),
    ("ac.uk", "University"),
    ("edu.au", "University"),
    ("ac.jp", "University"),
)


@dataclass(frozen=True)
class SuffixList:
    entries: frozenset[str]


@dataclass(frozen=True)
class CategoryRules:
    rules: tuple[tuple[str, str], ...]


def default_suffixes() -> SuffixList:
    return SuffixList(entries=frozenset(DEFAULT_SUFFIX_DATA))


def default_rules() -> CategoryRules:
    return CategoryRules(rules=DEFAULT_RULE_DATA)


def load_suffix_list(path: Path) -> SuffixList:
    with open(path, encoding="utf-8") as f:
        data = json.load(f)
    entries = data.get("suffixes") if isinstance(data, dict) else None
    if not isinstance(entries, list) or not entries:
        raise MalformedRecord(f"suffix file {path} must contain a non-empty 'suffixes' list")
    return SuffixList(entries=frozenset(s.strip(".").lower() for s in entries))


def load_category_rules(path: Path) -> CategoryRules:
    with open(path, encoding="utf-8") as f:
        data = json.load(f)
    rules = data.get("rules") if isinstance(data, dict) else None
    if not isinstance(rules, list):
        raise MalformedRecord(f"rules file {path} must contain a 'rules' list")
    out = []
    for item in rules:
        if not isinstance(item, list) or len(item) != 2:
            raise MalformedRecord(f"rule {item!r} must be a [pattern, category] pair")
        pattern, category = item
        if category not in CATEGORIES or category == "Other":
            raise MalformedRecord(f"rule {item!r} names an invalid category")
        out.append((pattern.lower(), category))
    return CategoryRules(rules=tuple(out))


@dataclass(frozen=True)
class ParsedUrl:
    scheme: str
    host: str
    subdomain: str
    registrable_domain: str
    public_suffix: str
    path: str
    suffix_known: bool


def parse_url(raw: str, suffixes: SuffixList | None = None) -> ParsedUrl:
    """Decompose a URL around its public suffix.

    The suffix is the longest list entry matching whole trailing labels and
    leaving at least one label for the registrable domain. A host matching
    no entry keeps its last label as the suffix but is flagged via
    ``suffix_known=False``.
    """
    suffixes = suffixes or default_suffixes()
    parts = urlsplit(raw)
    scheme = parts.scheme.lower()
    if scheme not in SUPPORTED_SCHEMES:
        raise UnparsableUrl(f"unsupported scheme in {raw!r}")
    host = parts.hostname
    if not host:
        raise UnparsableUrl(f"no host in {raw!r}")

    labels = host.split(".")
    best: list[str] | None = None
    for suffix in suffixes.entries:
        candidate = suffix.split(".")
        if len(candidate) < len(labels) and labels[-len(candidate):] == candidate:
            if best is None or len(candidate) > len(best):
                best = candidate

    if best is not None:
        cut = len(best) + 1
        return ParsedUrl(
            scheme=scheme,
            host=host,
            subdomain=".".join(labels[:-cut]),
            registrable_domain=".".join(labels[-cut:]),
            public_suffix=".".join(best),
            path=parts.path,
            suffix_known=True,
        )
    # Fallback: no entry matches; treat the last label as the suffix.
    if len(labels) >= 2:
        registrable = ".".join(labels[-2:])
        subdomain = ".".join(labels[:-2])
    else:
        registrable = host
        subdomain = ""
    return ParsedUrl(
        scheme=scheme,
        host=host,
        subdomain=subdomain,
        registrable_domain=registrable,
        public_suffix=labels[-1],
        path=parts.path,
        suffix_known=False,
    )


def categorize(parsed: ParsedUrl, rules: CategoryRules | None = None) -> str:
    """First matching rule's category; a pattern matches the whole host or
    any whole-label suffix of it."""
    rules = rules or default_rules()
    for pattern, category in rules.rules:
        if parsed.host == pattern or parsed.host.endswith("." + pattern):
            return category
    return "Other"


def _parsed_mentions(snapshot: CorpusSnapshot, suffixes: SuffixList | None):
    """(paper id, raw url, parsed) for every parseable mention, in order."""
    for pid in sorted(snapshot.papers):
        for raw in snapshot.papers[pid].url_mentions:
            try:
                yield pid, raw, parse_url(raw, suffixes)
            except UnparsableUrl:
                continue


def url_usage_by_year(
    registrable_domain: str,
    snapshot: CorpusSnapshot,
    suffixes: SuffixList | None = None,
) -> YearHistogram:
    """Mentions of the domain (with multiplicity) per mentioning-paper year."""
    wanted = registrable_domain.lower()
    years = [
        snapshot.papers[pid].year
        for pid, _raw, parsed in _parsed_mentions(snapshot, suffixes)
        if parsed.registrable_domain == wanted
    ]
    return YearHistogram.from_years(years)


@dataclass(frozen=True)
class UrlTables:
    top_tlds: tuple[tuple[str, int], ...]
    top_subdomains: tuple[tuple[str, int, tuple[str, ...]], ...]
    top_urls_per_category: dict[str, tuple[tuple[str, int], ...]]


def top_tables(
    snapshot: CorpusSnapshot,
    k: int,
    suffixes: SuffixList | None = None,
    rules: CategoryRules | None = None,
) -> UrlTables:
    """Frequency tables over all parseable mentions, each sorted by
    (count desc, name asc) and truncated to k."""
    tld_counts: Counter[str] = Counter()
    host_counts: Counter[str] = Counter()
    host_papers: dict[str, set[PaperId]] = defaultdict(set)
    category_urls: dict[str, Counter[str]] = {c: Counter() for c in CATEGORIES}
    for pid, raw, parsed in _parsed_mentions(snapshot, suffixes):
        tld_counts[parsed.public_suffix] += 1
        host_counts[parsed.host] += 1
        host_papers[parsed.host].add(pid)
        category_urls[categorize(parsed, rules)][raw] += 1

    def ranked(counter: Counter[str]) -> list[tuple[str, int]]:
        return sorted(counter.items(), key=lambda kv: (-kv[1], kv[0]))[:k]

    return UrlTables(
        top_tlds=tuple(ranked(tld_counts)),
        top_subdomains=tuple(
            (host, count, tuple(p.canonical for p in sorted(host_papers[host])))
            for host, count in ranked(host_counts)
        ),
        top_urls_per_category={
            category: tuple(ranked(counts))
            for category, counts in category_urls.items()
        },
    )
