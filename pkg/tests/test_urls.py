import pytest

from paperscope.errors import UnparsableUrl
from paperscope.ingest import load_corpus
from paperscope.urls import (
    CATEGORIES,
    CategoryRules,
    SuffixList,
    categorize,
    default_rules,
    default_suffixes,
    load_category_rules,
    load_suffix_list,
    parse_url,
    top_tables,
    url_usage_by_year,
)
from test_ingest import row, write_corpus
from url_cases import ERROR_CASES, PARSE_CASES


@pytest.mark.parametrize(
    "raw,scheme,host,subdomain,registrable,suffix,known", PARSE_CASES
)
def test_parse_table(raw, scheme, host, subdomain, registrable, suffix, known):
    parsed = parse_url(raw)
    assert parsed.scheme == scheme
    assert parsed.host == host
    assert parsed.subdomain == subdomain
    assert parsed.registrable_domain == registrable
    assert parsed.public_suffix == suffix
    assert parsed.suffix_known is known


@pytest.mark.parametrize("raw", ERROR_CASES)
def test_unparsable(raw):
    with pytest.raises(UnparsableUrl):
        parse_url(raw)


def test_host_recomposition_invariant():
    for raw, *_ in PARSE_CASES:
        p = parse_url(raw)
        if p.subdomain:
            assert p.host == p.subdomain + "." + p.registrable_domain
        else:
            assert p.host == p.registrable_domain


def test_longest_match_beats_shorter():
    suffixes = SuffixList(entries=frozenset({"uk", "ac.uk"}))
    parsed = parse_url("http://x.ac.uk", suffixes)
    assert parsed.public_suffix == "ac.uk"
    assert parsed.registrable_domain == "x.ac.uk"


def test_parse_idempotent_on_rendered_host():
    for raw, *_ in PARSE_CASES:
        p = parse_url(raw)
        again = parse_url(f"{p.scheme}://{p.host}{p.path}")
        assert (again.host, again.subdomain, again.registrable_domain, again.public_suffix) == (
            p.host,
            p.subdomain,
            p.registrable_domain,
            p.public_suffix,
        )


class TestCategorize:
    def test_university_suffixes(self):
        assert categorize(parse_url("http://cs.stanford.edu/x")) == "University"
        assert categorize(parse_url("http://www.cam.ac.uk")) == "University"

    def test_digital_library_host(self):
        assert categorize(parse_url("https://aclanthology.org/P19-1001")) == "DigitalLibrary"
        assert categorize(parse_url("https://www.aclanthology.org/x")) == "DigitalLibrary"

    def test_fallthrough_other(self):
        assert categorize(parse_url("http://random.example.net/x")) == "Other"

    def test_first_match_wins(self):
        rules = CategoryRules(rules=(("special.edu", "Dataset"), ("edu", "University")))
        assert categorize(parse_url("http://special.edu/x"), rules) == "Dataset"
        assert categorize(parse_url("http://plain.edu/x"), rules) == "University"

    def test_pattern_matches_whole_labels_only(self):
        rules = CategoryRules(rules=(("edu", "University"),))
        assert categorize(parse_url("http://fakeedu.com/x"), rules) == "Other"


class TestConfigFiles:
    def test_suffix_file_round_trip(self, tmp_path):
        path = tmp_path / "suffixes.json"
        path.write_text('{"suffixes": ["com", ".ORG"]}', encoding="utf-8")
        loaded = load_suffix_list(path)
        assert loaded.entries == frozenset({"com", "org"})

    def test_rules_file(self, tmp_path):
        path = tmp_path / "rules.json"
        path.write_text('{"rules": [["edu", "University"]]}', encoding="utf-8")
        assert load_category_rules(path).rules == (("edu", "University"),)

    def test_rules_file_rejects_other(self, tmp_path):
        path = tmp_path / "rules.json"
        path.write_text('{"rules": [["edu", "Other"]]}', encoding="utf-8")
        with pytest.raises(Exception):
            load_category_rules(path)


class TestUsage:
    def test_multiplicity_in_one_paper(self, tmp_path):
        rows = [row(pid="P17-1001", year=2017, title="Plain Title Words Here")]
        texts = {"P17-1001": "at http://data.example.com/a and http://data.example.com/b end"}
        snapshot, _ = load_corpus(write_corpus(tmp_path, rows, texts=texts))
        hist = url_usage_by_year("example.com", snapshot)
        assert hist.entries == {2017: 2}

    def test_unknown_domain_empty(self, snapshot):
        assert url_usage_by_year("nosuch.example", snapshot).total == 0

    def test_fixture_totals_match_brute_scan(self, truth, snapshot):
        from collections import Counter

        wanted = "stanford.edu"
        expected = Counter()
        for r in truth.metadata:
            for url in truth.url_mentions[r["id"]]:
                if parse_url(url).registrable_domain == wanted:
                    expected[r["year"]] += 1
        hist = url_usage_by_year(wanted, snapshot)
        assert hist.entries == dict(expected)


class TestTopTables:
    def test_empty_corpus(self, tmp_path):
        snapshot, _ = load_corpus(write_corpus(tmp_path, []))
        tables = top_tables(snapshot, 5)
        assert tables.top_tlds == ()
        assert tables.top_subdomains == ()
        assert all(not rows for rows in tables.top_urls_per_category.values())

    def test_tld_counts_partition_mentions(self, truth, snapshot):
        tables = top_tables(snapshot, 10_000)
        total_mentions = sum(len(v) for v in truth.url_mentions.values())
        assert sum(c for _, c in tables.top_tlds) == total_mentions

    def test_category_partition(self, truth, snapshot):
        tables = top_tables(snapshot, 10_000)
        total = sum(
            count for rows in tables.top_urls_per_category.values() for _, count in rows
        )
        assert total == sum(len(v) for v in truth.url_mentions.values())
        assert set(tables.top_urls_per_category) == set(CATEGORIES)

    def test_subdomain_table_keyed_by_host_with_papers(self, truth, snapshot):
        tables = top_tables(snapshot, 10_000)
        by_host = {host: (count, papers) for host, count, papers in tables.top_subdomains}
        count, papers = by_host["www.cs.stanford.edu"]
        expected_papers = sorted(
            r["id"]
            for r in truth.metadata
            if "http://www.cs.stanford.edu/data" in truth.url_mentions[r["id"]]
        )
        assert list(papers) == expected_papers
        assert count == 2 * len(expected_papers)

    def test_sorted_by_count_then_name(self, snapshot):
        tables = top_tables(snapshot, 10_000)
        for table in [tables.top_tlds, [(h, c) for h, c, _ in tables.top_subdomains]]:
            assert list(table) == sorted(table, key=lambda kv: (-kv[1], kv[0]))
