"""On-disk persistence for a built (snapshot, index, assignments, taxonomy)
bundle, with a format version and content checksum verified on load.

File layout: one JSON header line {"format_version", "checksum"} followed by
the JSON payload. The checksum is the SHA-256 of the payload bytes, so any
truncation or corruption fails loudly.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path

from .corpus import (
    AuthorRecord,
    CitationEdge,
    CorpusSnapshot,
    PaperId,
    PaperRecord,
    VenueRecord,
    parse_paper_id,
)
from .errors import ChecksumMismatch, VersionMismatch
from .index import InvertedIndex
from .topics import Taxonomy, TopicAssignment, taxonomy_from_data

FORMAT_VERSION = 1


@dataclass(frozen=True)
class SnapshotStore:
    snapshot: CorpusSnapshot
    index: InvertedIndex
    assignments: dict[PaperId, tuple[TopicAssignment, ...]]
    taxonomy: Taxonomy


def _encode_snapshot(s: CorpusSnapshot, include_build_info: bool = True) -> dict:
    payload = {
        "papers": [
            {
                "id": pid.canonical,
                "title": r.title,
                "authors": list(r.authors),
                "venue": r.venue,
                "year": r.year,
                "abstract": r.abstract,
                "full_text": r.full_text,
                "reference_strings": list(r.reference_strings),
                "url_mentions": list(r.url_mentions),
                "pdf_url": r.pdf_url,
            }
            for pid, r in sorted(s.papers.items())
        ],
        "authors": [
            {
                "key": a.key,
                "display_name": a.display_name,
                "paper_ids": sorted(p.canonical for p in a.paper_ids),
                "first_year": a.first_year,
                "last_year": a.last_year,
            }
            for _, a in sorted(s.authors.items())
        ],
        "venues": [
            {
                "key": v.key,
                "display_name": v.display_name,
                "papers_by_year": {
                    str(y): [p.canonical for p in ids]
                    for y, ids in sorted(v.papers_by_year.items())
                },
            }
            for _, v in sorted(s.venues.items())
        ],
        "citation_edges": sorted(
            [e.citing.canonical, e.cited.canonical] for e in s.citation_edges
        ),
        "unresolved_reference_count": s.unresolved_reference_count,
    }
    if include_build_info:
        payload["version"] = s.version
        payload["built_at"] = s.built_at
    return payload


def _decode_snapshot(data: dict) -> CorpusSnapshot:
    papers = {}
    for row in data["papers"]:
        pid = parse_paper_id(row["id"])
        papers[pid] = PaperRecord(
            id=pid,
            title=row["title"],
            authors=tuple(row["authors"]),
            venue=row["venue"],
            year=row["year"],
            abstract=row["abstract"],
            full_text=row["full_text"],
            reference_strings=tuple(row["reference_strings"]),
            url_mentions=tuple(row["url_mentions"]),
            pdf_url=row["pdf_url"],
        )
    authors = {
        row["key"]: AuthorRecord(
            key=row["key"],
            display_name=row["display_name"],
            paper_ids=frozenset(parse_paper_id(p) for p in row["paper_ids"]),
            first_year=row["first_year"],
            last_year=row["last_year"],
        )
        for row in data["authors"]
    }
    venues = {
        row["key"]: VenueRecord(
            key=row["key"],
            display_name=row["display_name"],
            papers_by_year={
                int(y): tuple(parse_paper_id(p) for p in ids)
                for y, ids in row["papers_by_year"].items()
            },
        )
        for row in data["venues"]
    }
    edges = frozenset(
        CitationEdge(citing=parse_paper_id(a), cited=parse_paper_id(b))
        for a, b in data["citation_edges"]
    )
    return CorpusSnapshot(
        papers=papers,
        authors=authors,
        venues=venues,
        citation_edges=edges,
        unresolved_reference_count=data["unresolved_reference_count"],
        version=data["version"],
        built_at=data["built_at"],
    )


def _encode_index(ix: InvertedIndex) -> dict:
    return {
        "postings": {
            field: {
                term: [[key, tf, list(positions)] for key, tf, positions in plist]
                for term, plist in terms.items()
            }
            for field, terms in ix.postings.items()
        },
        "doc_lengths": ix.doc_lengths,
        "domain_sizes": ix.domain_sizes,
        "ngram_year_totals": {
            str(n): {str(y): c for y, c in totals.items()}
            for n, totals in ix.ngram_year_totals.items()
        },
        "paper_years": ix.paper_years,
    }


def _decode_index(data: dict) -> InvertedIndex:
    return InvertedIndex(
        postings={
            field: {
                term: [(key, tf, tuple(positions)) for key, tf, positions in plist]
                for term, plist in terms.items()
            }
            for field, terms in data["postings"].items()
        },
        doc_lengths={f: dict(d) for f, d in data["doc_lengths"].items()},
        domain_sizes=dict(data["domain_sizes"]),
        ngram_year_totals={
            int(n): {int(y): c for y, c in totals.items()}
            for n, totals in data["ngram_year_totals"].items()
        },
        paper_years=dict(data["paper_years"]),
    )


def _encode_assignments(assignments: dict[PaperId, tuple[TopicAssignment, ...]]) -> dict:
    return {
        pid.canonical: [
            [a.category, a.subtopic, a.match_count, a.weight] for a in assigned
        ]
        for pid, assigned in sorted(assignments.items())
    }


def _decode_assignments(data: dict) -> dict[PaperId, tuple[TopicAssignment, ...]]:
    out = {}
    for canonical, rows in data.items():
        pid = parse_paper_id(canonical)
        out[pid] = tuple(
            TopicAssignment(
                paper_id=pid,
                category=category,
                subtopic=subtopic,
                match_count=count,
                weight=weight,
            )
            for category, subtopic, count, weight in rows
        )
    return out


def _payload_bytes(payload: dict) -> bytes:
    # Insertion order is deterministic by construction, so the raw bytes are
    # stable without key sorting; the checksum covers exactly these bytes.
    return json.dumps(payload, separators=(",", ":"), ensure_ascii=False).encode("utf-8")


def save_snapshot(store: SnapshotStore, path: Path) -> None:
    payload = {
        "snapshot": _encode_snapshot(store.snapshot),
        "index": _encode_index(store.index),
        "assignments": _encode_assignments(store.assignments),
        "taxonomy": store.taxonomy.raw(),
    }
    body = _payload_bytes(payload)
    header = json.dumps(
        {
            "format_version": FORMAT_VERSION,
            "checksum": hashlib.sha256(body).hexdigest(),
        }
    ).encode("utf-8")
    Path(path).write_bytes(header + b"\n" + body)


def load_snapshot(path: Path) -> SnapshotStore:
    blob = Path(path).read_bytes()
    newline = blob.find(b"\n")
    if newline < 0:
        raise ChecksumMismatch(f"{path}: store file has no header line")
    try:
        header = json.loads(blob[:newline])
        format_version = header["format_version"]
        checksum = header["checksum"]
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise ChecksumMismatch(f"{path}: unreadable store header") from exc
    if format_version > FORMAT_VERSION:
        raise VersionMismatch(
            f"{path}: format version {format_version} is newer than supported {FORMAT_VERSION}"
        )
    body = blob[newline + 1 :]
    if hashlib.sha256(body).hexdigest() != checksum:
        raise ChecksumMismatch(f"{path}: payload checksum mismatch")
    payload = json.loads(body)
    return SnapshotStore(
        snapshot=_decode_snapshot(payload["snapshot"]),
        index=_decode_index(payload["index"]),
        assignments=_decode_assignments(payload["assignments"]),
        taxonomy=taxonomy_from_data(payload["taxonomy"]),
    )


def content_digest(snapshot: CorpusSnapshot) -> str:
    """Digest of the snapshot content, ignoring version and build time."""
    return hashlib.sha256(
        _payload_bytes(_encode_snapshot(snapshot, include_build_info=False))
    ).hexdigest()
