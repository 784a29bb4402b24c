import pytest
from hypothesis import given, strategies as st

import oracles
from conftest import add_extra_paper, layout_for
from paperscope.corpus import parse_paper_id
from paperscope.errors import BadPage, BadYearRange, EmptyQuery, PhraseTooLong
from paperscope.index import (
    SearchDomain,
    build_index,
    ngram_trend,
    search,
    snippet,
    tokenize,
)
from paperscope.ingest import load_corpus
from test_ingest import row, write_corpus


class TestTokenize:
    def test_keeps_intra_word_hyphens(self):
        assert tokenize("Part-of-speech Tagging!") == ["part-of-speech", "tagging"]

    def test_empty(self):
        assert tokenize("") == []

    def test_keeps_apostrophes_and_digits(self):
        assert tokenize("NLP's 2019 results") == ["nlp's", "2019", "results"]

    def test_underscore_and_punctuation_split(self):
        assert tokenize("foo_bar, baz--qux") == ["foo", "bar", "baz", "qux"]

    @given(st.text(max_size=80))
    def test_tokens_never_contain_whitespace(self, text):
        for tok in tokenize(text):
            assert tok
            assert not any(ch.isspace() for ch in tok)


class TestBuildIndex:
    def test_single_document_posting(self, tmp_path):
        layout = write_corpus(tmp_path, [row(title="Chunking Corpus Results Here")])
        snapshot, _ = load_corpus(layout)
        ix = build_index(snapshot)
        postings = ix.postings["title"]["chunking"]
        assert postings == [("P19-1001", 1, (0,))]

    def test_empty_snapshot(self, tmp_path):
        layout = write_corpus(tmp_path, [])
        snapshot, _ = load_corpus(layout)
        ix = build_index(snapshot)
        assert ix.postings == {}
        assert ix.domain_sizes[SearchDomain.PAPERS.value] == 0

    def test_positions_strictly_increasing_and_sorted(self, bundle):
        for terms in bundle.index.postings.values():
            for plist in terms.values():
                keys = [key for key, _, _ in plist]
                assert keys == sorted(keys)
                for _, tf, positions in plist:
                    assert tf == len(positions)
                    assert list(positions) == sorted(set(positions))

    def test_unigram_totals_match_brute_count(self, truth, fixture_texts, bundle):
        by_year = {}
        for pid, text in fixture_texts.items():
            year = next(r["year"] for r in truth.metadata if r["id"] == pid)
            by_year.setdefault(year, []).append(text)
        for year, texts in by_year.items():
            expected = sum(len(oracles.otokens(t)) for t in texts)
            assert bundle.index.ngram_year_totals[1][year] == expected

    def test_rebuild_never_decreases_term_frequency(self, corpus_copy):
        old_snapshot, _ = load_corpus(layout_for(corpus_copy))
        old_ix = build_index(old_snapshot)
        add_extra_paper(corpus_copy)
        new_snapshot, _ = load_corpus(layout_for(corpus_copy))
        new_ix = build_index(new_snapshot)
        for field_name, terms in old_ix.postings.items():
            for term, plist in terms.items():
                new_tfs = dict(
                    (key, tf) for key, tf, _ in new_ix.postings[field_name][term]
                )
                for key, tf, _ in plist:
                    assert new_tfs[key] == tf


class TestSearch:
    def test_higher_tf_ranks_first(self, tmp_path):
        layout = write_corpus(
            tmp_path,
            [
                row(pid="P19-1001", title="chunking chunking filler filler"),
                row(pid="P19-1002", title="chunking filler filler filler"),
            ],
        )
        snapshot, _ = load_corpus(layout)
        ix = build_index(snapshot)
        total, hits = search(ix, "chunking", SearchDomain.PAPERS)
        assert total == 2
        assert [h.key for h in hits] == ["P19-1001", "P19-1002"]
        assert hits[0].score > hits[1].score

    def test_absent_term(self, bundle):
        assert search(bundle.index, "zzzz", SearchDomain.PAPERS) == (0, [])

    def test_empty_query(self, bundle):
        with pytest.raises(EmptyQuery):
            search(bundle.index, "  !! ", SearchDomain.PAPERS)

    def test_bad_page(self, bundle):
        with pytest.raises(BadPage):
            search(bundle.index, "corpus", SearchDomain.PAPERS, page=0)

    def test_page_past_end_is_empty(self, bundle):
        total, hits = search(bundle.index, "corpus", SearchDomain.PAPERS, page=99)
        assert total > 0
        assert hits == []

    def test_score_positive_implies_matched_terms(self, bundle):
        _, hits = search(bundle.index, "neural corpus", SearchDomain.PAPERS)
        for hit in hits:
            assert hit.score > 0
            assert hit.matched_terms

    def test_pagination_concatenates_to_full_ranking(self, bundle):
        total, everything = search(
            bundle.index, "corpus model", SearchDomain.PAPERS, page_size=1000
        )
        paged = []
        page = 1
        while True:
            _, hits = search(
                bundle.index, "corpus model", SearchDomain.PAPERS, page=page, page_size=7
            )
            if not hits:
                break
            paged.extend(hits)
            page += 1
        assert paged == everything

    def test_purity(self, bundle):
        first = search(bundle.index, "translation", SearchDomain.PAPERS, page=2, page_size=5)
        second = search(bundle.index, "translation", SearchDomain.PAPERS, page=2, page_size=5)
        assert first == second

    def test_author_domain(self, bundle):
        total, hits = search(bundle.index, "tanaka", SearchDomain.AUTHORS)
        assert total == 1
        assert hits[0].key == "bob tanaka"

    def test_author_domain_keeps_display_diacritics(self, bundle):
        # Display names are indexed as-is; keys are the normalized form.
        total, hits = search(bundle.index, "garcía", SearchDomain.AUTHORS)
        assert total == 1
        assert hits[0].key == "jose garcia"

    def test_matches_oracle_on_fixture(self, truth, fixture_texts, bundle):
        docs = {
            r["id"]: {
                "title": r["title"],
                "abstract": r["abstract"],
                "full_text": fixture_texts[r["id"]],
            }
            for r in truth.metadata
        }
        fields = [("title", 3.0), ("abstract", 2.0), ("full_text", 1.0)]
        for query in ["summarization", "neural machine translation", "survey corpus"]:
            expected = oracles.bm25_scores(docs, query, fields)
            total, hits = search(
                bundle.index, query, SearchDomain.PAPERS, page_size=10_000
            )
            assert total == len(expected)
            assert [h.key for h in hits] == [k for k, _ in expected]
            for hit, (_, score) in zip(hits, expected):
                assert hit.score == pytest.approx(score, abs=1e-9)


class TestNgramTrend:
    def test_simple_ratio(self, tmp_path):
        layout = write_corpus(
            tmp_path,
            [row(title="Four Word Title Here")],
            texts={"P19-1001": "neural beats neural baselines"},
        )
        snapshot, _ = load_corpus(layout)
        ix = build_index(snapshot)
        values = ngram_trend(ix, "neural", 2019, 2019)
        assert values == {2019: 0.5}

    def test_absent_phrase_is_zero(self, bundle):
        values = ngram_trend(bundle.index, "zzzz qqqq", 2000, 2019)
        assert set(values) == set(range(2000, 2020))
        assert all(v == 0.0 for v in values.values())

    def test_values_in_unit_interval(self, bundle):
        for phrase in ["neural", "machine translation", "neural machine translation"]:
            for value in ngram_trend(bundle.index, phrase, 2000, 2019).values():
                assert 0.0 <= value <= 1.0

    def test_phrase_too_long(self, bundle):
        with pytest.raises(PhraseTooLong):
            ngram_trend(bundle.index, "one two three four", 2000, 2019)

    def test_bad_year_range(self, bundle):
        with pytest.raises(BadYearRange):
            ngram_trend(bundle.index, "neural", 2019, 2000)

    def test_bigram_matches_sliding_window(self, truth, fixture_texts, bundle):
        by_year = {}
        for r in truth.metadata:
            by_year.setdefault(r["year"], []).append(fixture_texts[r["id"]])
        expected = oracles.ngram_year_frequencies(
            by_year, ["machine", "translation"], range(2000, 2020)
        )
        got = ngram_trend(bundle.index, "machine translation", 2000, 2019)
        assert got == pytest.approx(expected, abs=1e-12)


def test_snippet_centers_on_first_match():
    text = " ".join(f"w{i}" for i in range(40))
    out = snippet([text.replace("w25", "needle")], frozenset({"needle"}))
    assert out.split()[10] == "needle"
    assert len(out.split()) == 21
