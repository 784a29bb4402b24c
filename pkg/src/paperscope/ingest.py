"""Corpus directory loading: metadata parsing, text attachment, URL mention
extraction, and the three-stage reference resolver that builds the citation
graph.

The resolver is this engine's own definition. Stage 1 looks for an embedded
canonical id, stage 2 for exact whole-token containment of a known title
(four or more tokens), stage 3 falls back to token-set Jaccard similarity
with a configurable acceptance threshold.
"""

from __future__ import annotations

import datetime as _dt
import json
import logging
import re
from dataclasses import dataclass, field
from pathlib import Path

from .corpus import (
    ID_SCAN_RE,
    MIN_YEAR,
    AuthorRecord,
    CitationEdge,
    CorpusSnapshot,
    PaperId,
    PaperRecord,
    VenueRecord,
    normalize_author_name,
    normalize_venue_key,
    parse_paper_id,
    validate_snapshot,
    year_from_id,
)
from .errors import DuplicateId, MalformedId, MalformedRecord, MissingMetadata

logger = logging.getLogger(__name__)

JACCARD_THRESHOLD = 0.9
MIN_TITLE_TOKENS = 4

_URL_RE = re.compile(r"(?:https?|ftp)://\S+")
_TRAILING_PUNCT = set(".,;:)]}>\"'")

# Matching normalization keeps intra-word hyphens and drops all other
# punctuation, so titles and reference strings compare on bare tokens.
_MATCH_TOKEN_RE = re.compile(r"[^\W_]+(?:-[^\W_]+)*")


def match_tokens(text: str) -> list[str]:
    return _MATCH_TOKEN_RE.findall(text.lower())


def extract_urls(text: str) -> list[str]:
    """Return every URL mention, in order and with multiplicity.

    A mention is a maximal non-whitespace run starting with http://,
    https:// or ftp://; trailing punctuation is stripped.
    """
    out = []
    for m in _URL_RE.finditer(text):
        u = m.group(0)
        while u and u[-1] in _TRAILING_PUNCT:
            u = u[:-1]
        if u.split("://", 1)[1]:
            out.append(u)
    return out


@dataclass(frozen=True)
class CorpusDirectoryLayout:
    """On-disk corpus: one JSONL metadata file, a directory of <id>.txt full
    texts, and optionally a directory of <id>.refs.txt bibliography files."""

    metadata_path: Path
    text_dir: Path | None = None
    refs_dir: Path | None = None


@dataclass
class IngestReport:
    papers_loaded: int = 0
    texts_attached: int = 0
    references_seen: int = 0
    references_resolved: int = 0
    urls_extracted: int = 0
    warnings: list[tuple[str, str]] = field(default_factory=list)

    def warn(self, file: str, message: str) -> None:
        self.warnings.append((file, message))
        logger.warning("%s: %s", file, message)


class ReferenceResolver:
    """Maps raw bibliography strings onto in-corpus paper ids."""

    def __init__(
        self,
        papers: dict[PaperId, PaperRecord],
        jaccard_threshold: float = JACCARD_THRESHOLD,
        min_title_tokens: int = MIN_TITLE_TOKENS,
    ):
        self._ids = {pid.canonical: pid for pid in papers}
        self._jaccard_threshold = jaccard_threshold
        self._containment: list[tuple[str, PaperId]] = []
        self._token_sets: list[tuple[frozenset[str], PaperId]] = []
        for pid, record in papers.items():
            tokens = match_tokens(record.title)
            if len(tokens) >= min_title_tokens:
                self._containment.append((" " + " ".join(tokens) + " ", pid))
            self._token_sets.append((frozenset(tokens), pid))

    def resolve(self, ref: str) -> PaperId | None:
        # Stage 1: embedded canonical id.
        for m in ID_SCAN_RE.finditer(ref):
            pid = self._ids.get(m.group(0))
            if pid is not None:
                return pid

        tokens = match_tokens(ref)
        if not tokens:
            return None

        # Stage 2: exact whole-token containment of a unique known title.
        padded = " " + " ".join(tokens) + " "
        hits = {pid for needle, pid in self._containment if needle in padded}
        if len(hits) == 1:
            return next(iter(hits))

        # Stage 3: token-set Jaccard similarity, unique argmax required.
        ref_set = set(tokens)
        best: PaperId | None = None
        best_score = 0.0
        tie = False
        for title_set, pid in self._token_sets:
            union = len(ref_set | title_set)
            if union == 0:
                continue
            score = len(ref_set & title_set) / union
            if score > best_score:
                best, best_score, tie = pid, score, False
            elif score == best_score and best is not None:
                tie = True
        if best is not None and not tie and best_score >= self._jaccard_threshold:
            return best
        return None


def resolve_reference(ref: str, papers: dict[PaperId, PaperRecord]) -> PaperId | None:
    """One-off resolution against a paper collection."""
    return ReferenceResolver(papers).resolve(ref)


def load_corpus(layout: CorpusDirectoryLayout) -> tuple[CorpusSnapshot, IngestReport]:
    """Build a version-1 snapshot from the directory. Deterministic for
    identical input bytes, modulo the build timestamp."""
    return _build(layout, version=1)


def reingest(
    layout: CorpusDirectoryLayout, old: CorpusSnapshot
) -> tuple[CorpusSnapshot, IngestReport]:
    """Full rebuild; the result matches a fresh load except for the version
    counter. Raises on any error, leaving the caller's old snapshot intact."""
    return _build(layout, version=old.version + 1)


def _parse_metadata_line(line: str, line_no: int, now_year: int) -> PaperRecord:
    try:
        row = json.loads(line)
    except json.JSONDecodeError as exc:
        raise MalformedRecord(f"invalid JSON ({exc.msg})", line_no) from exc
    if not isinstance(row, dict):
        raise MalformedRecord("record is not an object", line_no)

    for key in ("id", "title", "authors", "venue", "year"):
        if key not in row:
            raise MalformedRecord(f"missing required key {key!r}", line_no)

    if not isinstance(row["id"], str):
        raise MalformedRecord("id must be a string", line_no)
    try:
        pid = parse_paper_id(row["id"])
    except MalformedId as exc:
        raise MalformedRecord(str(exc), line_no) from exc

    title = row["title"]
    if not isinstance(title, str) or not title.strip():
        raise MalformedRecord("title must be a non-empty string", line_no)

    authors = row["authors"]
    if (
        not isinstance(authors, list)
        or not authors
        or not all(isinstance(a, str) and a.strip() for a in authors)
    ):
        raise MalformedRecord("authors must be a non-empty list of names", line_no)

    venue = row["venue"]
    if not isinstance(venue, str) or not venue.strip():
        raise MalformedRecord("venue must be a non-empty string", line_no)

    year = row["year"]
    if isinstance(year, bool) or not isinstance(year, int):
        raise MalformedRecord("year must be an integer", line_no)
    if not MIN_YEAR <= year <= now_year:
        raise MalformedRecord(f"year {year} outside [{MIN_YEAR}, {now_year}]", line_no)
    if year_from_id(pid) != year:
        raise MalformedRecord(
            f"year {year} inconsistent with id {pid} (implies {year_from_id(pid)})",
            line_no,
        )

    abstract = row.get("abstract")
    if abstract is not None and not isinstance(abstract, str):
        raise MalformedRecord("abstract must be a string", line_no)
    pdf_url = row.get("url")
    if pdf_url is not None and not isinstance(pdf_url, str):
        raise MalformedRecord("url must be a string", line_no)

    return PaperRecord(
        id=pid,
        title=title.strip(),
        authors=tuple(a.strip() for a in authors),
        venue=venue.strip(),
        year=year,
        abstract=abstract,
        pdf_url=pdf_url,
    )


def _read_id_files(
    directory: Path | None,
    suffix: str,
    known: dict[PaperId, PaperRecord],
    report: IngestReport,
) -> dict[PaperId, str]:
    """Read per-paper files named <canonical id><suffix>; ids that do not
    parse or lack a metadata entry are reported, never silently ingested."""
    out: dict[PaperId, str] = {}
    if directory is None:
        return out
    if not directory.is_dir():
        report.warn(str(directory), "directory does not exist")
        return out
    for path in sorted(directory.glob(f"*{suffix}")):
        stem = path.name[: -len(suffix)]
        try:
            pid = parse_paper_id(stem)
        except MalformedId:
            report.warn(path.name, "file name is not a valid paper id")
            continue
        if pid not in known:
            report.warn(path.name, f"no metadata entry for {pid}")
            continue
        try:
            out[pid] = path.read_text(encoding="utf-8")
        except UnicodeDecodeError:
            report.warn(path.name, "not valid UTF-8, skipped")
    return out


def _build(
    layout: CorpusDirectoryLayout, version: int
) -> tuple[CorpusSnapshot, IngestReport]:
    report = IngestReport()
    now_year = _dt.date.today().year

    if not layout.metadata_path.is_file():
        raise MissingMetadata(f"metadata file not found: {layout.metadata_path}")

    base: dict[PaperId, PaperRecord] = {}
    with open(layout.metadata_path, encoding="utf-8") as f:
        for line_no, line in enumerate(f, start=1):
            if not line.strip():
                continue
            record = _parse_metadata_line(line, line_no, now_year)
            if record.id in base:
                raise DuplicateId(f"duplicate paper id {record.id}")
            base[record.id] = record

    texts = _read_id_files(layout.text_dir, ".txt", base, report)
    refs = _read_id_files(layout.refs_dir, ".refs.txt", base, report)

    papers: dict[PaperId, PaperRecord] = {}
    for pid, record in base.items():
        full_text = texts.get(pid)
        mentions = tuple(extract_urls(full_text)) if full_text else ()
        ref_lines = tuple(
            line.strip() for line in refs.get(pid, "").splitlines() if line.strip()
        )
        papers[pid] = PaperRecord(
            id=record.id,
            title=record.title,
            authors=record.authors,
            venue=record.venue,
            year=record.year,
            abstract=record.abstract,
            full_text=full_text,
            reference_strings=ref_lines,
            url_mentions=mentions,
            pdf_url=record.pdf_url,
        )
        report.urls_extracted += len(mentions)
    report.papers_loaded = len(papers)
    report.texts_attached = len(texts)

    resolver = ReferenceResolver(papers)
    edges: set[CitationEdge] = set()
    for pid, record in papers.items():
        for ref in record.reference_strings:
            report.references_seen += 1
            target = resolver.resolve(ref)
            if target is None:
                continue
            if target == pid:
                report.warn(str(pid), f"reference resolves to the citing paper: {ref!r}")
                continue
            report.references_resolved += 1
            edges.add(CitationEdge(citing=pid, cited=target))
    unresolved = report.references_seen - report.references_resolved

    authors: dict[str, AuthorRecord] = {}
    seen_authors: dict[str, tuple[str, set[PaperId]]] = {}
    for pid, record in papers.items():
        for name in record.authors:
            key = normalize_author_name(name)
            if key not in seen_authors:
                seen_authors[key] = (name, set())
            seen_authors[key][1].add(pid)
    for key, (display, pids) in seen_authors.items():
        years = [papers[p].year for p in pids]
        authors[key] = AuthorRecord(
            key=key,
            display_name=display,
            paper_ids=frozenset(pids),
            first_year=min(years),
            last_year=max(years),
        )

    venues: dict[str, VenueRecord] = {}
    venue_seen: dict[str, tuple[str, dict[int, list[PaperId]]]] = {}
    for pid, record in papers.items():
        vkey = record.venue_key
        if vkey not in venue_seen:
            venue_seen[vkey] = (record.venue, {})
        venue_seen[vkey][1].setdefault(record.year, []).append(pid)
    for vkey, (display, by_year) in venue_seen.items():
        venues[vkey] = VenueRecord(
            key=vkey,
            display_name=display,
            papers_by_year={y: tuple(sorted(ids)) for y, ids in sorted(by_year.items())},
        )

    snapshot = CorpusSnapshot(
        papers=papers,
        authors=authors,
        venues=venues,
        citation_edges=frozenset(edges),
        unresolved_reference_count=unresolved,
        version=version,
        built_at=_dt.datetime.now(_dt.timezone.utc).isoformat(),
    )
    validate_snapshot(snapshot)
    logger.info(
        "built snapshot v%d: %d papers, %d edges, %d unresolved refs",
        version,
        len(papers),
        len(edges),
        unresolved,
    )
    return snapshot, report
