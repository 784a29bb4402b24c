import json

import pytest

from conftest import add_extra_paper, layout_for
from paperscope.corpus import parse_paper_id
from paperscope.errors import DuplicateId, MalformedRecord, MissingMetadata
from paperscope.ingest import (
    CorpusDirectoryLayout,
    ReferenceResolver,
    extract_urls,
    load_corpus,
    reingest,
)
from paperscope.store import content_digest


def make_papers(*rows):
    from paperscope.corpus import PaperRecord

    papers = {}
    for rid, title in rows:
        pid = parse_paper_id(rid)
        papers[pid] = PaperRecord(
            id=pid, title=title, authors=("A Person",), venue="V", year=2000 + pid.year_code
        )
    return papers


class TestExtractUrls:
    def test_strips_trailing_punctuation(self):
        assert extract_urls("see http://example.org/data.") == ["http://example.org/data"]

    def test_parenthesized(self):
        assert extract_urls("(https://a.b.edu/x)") == ["https://a.b.edu/x"]

    def test_no_links(self):
        assert extract_urls("no links here") == []

    def test_multiplicity_and_order(self):
        text = "ftp://x.org/a then http://y.de/b then ftp://x.org/a"
        assert extract_urls(text) == ["ftp://x.org/a", "http://y.de/b", "ftp://x.org/a"]

    def test_never_returns_whitespace_or_stripped_tail(self):
        text = 'mix http://a.com/x), http://b.org/y;" and https://c.edu/z.'
        for url in extract_urls(text):
            assert " " not in url
            assert url[-1] not in set(".,;:)]}>\"'")


class TestResolver:
    def test_stage1_embedded_id(self):
        papers = make_papers(("P19-1001", "Some Paper Title Here"))
        resolver = ReferenceResolver(papers)
        assert resolver.resolve("As shown in P19-1001 (2019).").canonical == "P19-1001"

    def test_stage1_ignores_unknown_id(self):
        papers = make_papers(("P19-1001", "Some Paper Title Here"))
        assert ReferenceResolver(papers).resolve("see Z99-9999") is None

    def test_stage2_exact_title_containment(self):
        papers = make_papers(("P18-1001", "Neural Machine Translation Systems"))
        resolver = ReferenceResolver(papers)
        ref = "Doe (2018). Neural Machine Translation Systems. ACL."
        assert resolver.resolve(ref).canonical == "P18-1001"

    def test_stage2_needs_four_tokens(self):
        papers = make_papers(("P18-1001", "Neural Translation"))
        ref = "Doe (2018). Neural Translation. ACL."
        # Too short for containment and Jaccard is diluted by the extra tokens.
        assert ReferenceResolver(papers).resolve(ref) is None

    def test_stage2_ambiguous_titles_do_not_resolve(self):
        papers = make_papers(
            ("P18-1001", "Neural Machine Translation Systems"),
            ("P18-1002", "Neural Machine Translation Systems"),
        )
        ref = "Doe (2018). Neural Machine Translation Systems. ACL."
        assert ReferenceResolver(papers).resolve(ref) is None

    def test_stage3_below_threshold(self):
        # Jaccard {neural, machine, translation, systems} vs
        # {neural, machine, translation, system} = 3/5 = 0.6 < 0.9.
        papers = make_papers(("P18-1001", "Neural Machine Translation Systems"))
        assert ReferenceResolver(papers).resolve("translation machine neural system") is None

    def test_stage3_at_threshold_resolves(self):
        title = " ".join(f"tok{i}" for i in range(19))
        papers = make_papers(("P18-1001", title))
        ref = " ".join(f"tok{i}" for i in range(19) if i != 4)
        resolved = ReferenceResolver(papers).resolve(ref)
        assert resolved is not None and resolved.canonical == "P18-1001"


def write_corpus(root, rows, texts=None, refs=None):
    (root / "texts").mkdir(exist_ok=True)
    (root / "refs").mkdir(exist_ok=True)
    with open(root / "metadata.jsonl", "w", encoding="utf-8") as f:
        for row in rows:
            f.write(json.dumps(row) + "\n")
    for pid, text in (texts or {}).items():
        (root / "texts" / f"{pid}.txt").write_text(text, encoding="utf-8")
    for pid, lines in (refs or {}).items():
        (root / "refs" / f"{pid}.refs.txt").write_text("\n".join(lines), encoding="utf-8")
    return layout_for(root)


def row(pid="P19-1001", **overrides):
    base = {
        "id": pid,
        "title": "Plain Title Words Here",
        "authors": ["A Person"],
        "venue": "ACL",
        "year": 2019,
    }
    base.update(overrides)
    return base


class TestLoadCorpus:
    def test_empty_metadata(self, tmp_path):
        layout = write_corpus(tmp_path, [])
        snapshot, report = load_corpus(layout)
        assert snapshot.papers == {}
        assert snapshot.citation_edges == frozenset()
        assert report.papers_loaded == 0

    def test_missing_metadata(self, tmp_path):
        with pytest.raises(MissingMetadata):
            load_corpus(layout_for(tmp_path))

    def test_duplicate_id_names_the_id(self, tmp_path):
        layout = write_corpus(tmp_path, [row(), row(title="Other Title Words Here")])
        with pytest.raises(DuplicateId, match="P19-1001"):
            load_corpus(layout)

    @pytest.mark.parametrize(
        "bad,match",
        [
            ({"id": "bad"}, "not a valid paper id"),
            ({"year": "2019"}, "year must be an integer"),
            ({"year": 1950}, "outside"),
            ({"year": 2018}, "inconsistent with id"),
            ({"title": "  "}, "title"),
            ({"authors": []}, "authors"),
        ],
    )
    def test_malformed_records(self, tmp_path, bad, match):
        layout = write_corpus(tmp_path, [row(**bad)])
        with pytest.raises(MalformedRecord, match=match):
            load_corpus(layout)

    def test_malformed_record_carries_line_number(self, tmp_path):
        layout = write_corpus(tmp_path, [row(), row(pid="Q19-0001", year=1950)])
        with pytest.raises(MalformedRecord, match="line 2"):
            load_corpus(layout)

    def test_unknown_text_files_warned_not_ingested(self, tmp_path):
        layout = write_corpus(
            tmp_path, [row()], texts={"P19-1001": "body", "P19-9999": "orphan"}
        )
        snapshot, report = load_corpus(layout)
        assert snapshot.papers[parse_paper_id("P19-1001")].full_text == "body"
        assert any("P19-9999" in file for file, _ in report.warnings)

    def test_bad_file_name_warned(self, tmp_path):
        layout = write_corpus(tmp_path, [row()])
        (tmp_path / "texts" / "notanid.txt").write_text("x", encoding="utf-8")
        _, report = load_corpus(layout)
        assert any("notanid" in file for file, _ in report.warnings)

    def test_self_reference_dropped(self, tmp_path):
        layout = write_corpus(
            tmp_path, [row()], refs={"P19-1001": ["See P19-1001 for details."]}
        )
        snapshot, report = load_corpus(layout)
        assert snapshot.citation_edges == frozenset()
        assert report.references_resolved == 0
        assert snapshot.unresolved_reference_count == 1

    def test_determinism(self, truth):
        a, _ = load_corpus(layout_for(truth.root))
        b, _ = load_corpus(layout_for(truth.root))
        assert content_digest(a) == content_digest(b)

    def test_resolved_accounting(self, snapshot, snapshot_and_report):
        _, report = snapshot_and_report
        assert report.references_resolved <= report.references_seen
        assert (
            snapshot.unresolved_reference_count
            == report.references_seen - report.references_resolved
        )


class TestReingest:
    def test_unchanged_directory_bumps_version_only(self, corpus_copy):
        old, _ = load_corpus(layout_for(corpus_copy))
        new, _ = reingest(layout_for(corpus_copy), old)
        assert new.version == old.version + 1
        assert content_digest(new) == content_digest(old)

    def test_added_paper_extends_corpus(self, corpus_copy):
        old, _ = load_corpus(layout_for(corpus_copy))
        add_extra_paper(corpus_copy)
        new, _ = reingest(layout_for(corpus_copy), old)
        assert len(new.papers) == len(old.papers) + 1
        assert old.citation_edges <= new.citation_edges

    def test_error_leaves_caller_with_old_snapshot(self, corpus_copy):
        old, _ = load_corpus(layout_for(corpus_copy))
        with open(corpus_copy / "metadata.jsonl", "a", encoding="utf-8") as f:
            f.write("{not json\n")
        with pytest.raises(MalformedRecord):
            reingest(layout_for(corpus_copy), old)
        assert len(old.papers) == 60
