#!/usr/bin/env python3
"""Record API responses from a fixture-corpus server into tests/fixtures/.

The recorded JSON files are the contract baseline for the UI tests: every
number the UI renders must equal a field in one of these bodies.
"""

import json
import sys
import tempfile
from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parents[2]
sys.path.insert(0, str(REPO_ROOT / "tests"))
OUT_DIR = Path(__file__).resolve().parents[1] / "tests" / "fixtures"

from fastapi.testclient import TestClient  # noqa: E402

import fixture_corpus  # noqa: E402
from paperscope.service.app import create_app  # noqa: E402
from paperscope.service.config import ApiConfig  # noqa: E402
from paperscope.service.state import ServiceState, build_bundle  # noqa: E402

RECORDINGS = {
    "summary.json": "/api/corpus/summary",
    "search_summarization.json": "/api/search?q=summarization&domain=papers",
    "paper.json": "/api/papers/P00-1000",
    "author.json": "/api/authors/alice%20newman",
    "venue.json": "/api/venues/acl",
    "topics.json": "/api/topics",
    "topic_dist.json": "/api/topics/Task/Tagging",
    "timeline.json": "/api/topics/timeline",
    "list_seminal.json": "/api/lists/SeminalPapers?k=10",
    "ngrams.json": "/api/ngrams?phrase=machine%20translation&from=2000&to=2019",
    "urls_top.json": "/api/urls/top?k=10",
    "url_domain.json": "/api/urls/stanford.edu",
    "error_unknown_paper.json": "/api/papers/Z99-9999",
}


def main() -> int:
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    with tempfile.TemporaryDirectory() as tmp:
        fixture_corpus.generate(Path(tmp))
        config = ApiConfig(corpus_dir=tmp)
        state = ServiceState(config, build_bundle(config)[0])
        client = TestClient(create_app(state))
        for filename, path in RECORDINGS.items():
            body = client.get(path).json()
            (OUT_DIR / filename).write_text(
                json.dumps(body, indent=2, ensure_ascii=False) + "\n", encoding="utf-8"
            )
            print(f"recorded {filename} <- {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
