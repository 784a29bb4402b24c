import json
import shutil
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

import fixture_corpus
from paperscope.ingest import CorpusDirectoryLayout, load_corpus
from paperscope.service.app import create_app
from paperscope.service.config import ApiConfig
from paperscope.service.state import ServiceState, bundle_from_snapshot
from paperscope.topics import default_taxonomy
from paperscope.urls import default_rules, default_suffixes


def layout_for(root: Path) -> CorpusDirectoryLayout:
    return CorpusDirectoryLayout(
        metadata_path=root / "metadata.jsonl",
        text_dir=root / "texts",
        refs_dir=root / "refs",
    )


@pytest.fixture(scope="session")
def truth(tmp_path_factory):
    root = tmp_path_factory.mktemp("fixture_corpus")
    return fixture_corpus.generate(root)


@pytest.fixture(scope="session")
def fixture_texts(truth):
    return {
        pid: (truth.root / "texts" / f"{pid}.txt").read_text(encoding="utf-8")
        for pid in truth.paper_ids
    }


@pytest.fixture(scope="session")
def snapshot_and_report(truth):
    return load_corpus(layout_for(truth.root))


@pytest.fixture(scope="session")
def snapshot(snapshot_and_report):
    return snapshot_and_report[0]


@pytest.fixture(scope="session")
def bundle(snapshot):
    return bundle_from_snapshot(
        snapshot, default_taxonomy(), default_suffixes(), default_rules()
    )


@pytest.fixture(scope="session")
def service_state(truth, bundle):
    config = ApiConfig(corpus_dir=str(truth.root))
    return ServiceState(config, bundle)


@pytest.fixture(scope="session")
def client(service_state):
    return TestClient(create_app(service_state))


@pytest.fixture()
def corpus_copy(truth, tmp_path):
    """Writable copy of the fixture corpus for re-ingest tests."""
    dest = tmp_path / "corpus"
    shutil.copytree(truth.root, dest)
    return dest


def add_extra_paper(corpus_dir: Path) -> str:
    """Append one well-formed 2019 paper to a corpus copy."""
    row = {
        "id": "P19-1999",
        "title": "Additional Morphology Benchmark Resource Keystone99",
        "authors": ["Alice Newman"],
        "venue": "ACL",
        "year": 2019,
        "abstract": "A fresh morphology benchmark on keystone99 data.",
    }
    with open(corpus_dir / "metadata.jsonl", "a", encoding="utf-8") as f:
        f.write(json.dumps(row) + "\n")
    (corpus_dir / "texts" / "P19-1999.txt").write_text(
        "The morphology benchmark shows resource gains.", encoding="utf-8"
    )
    return row["id"]
