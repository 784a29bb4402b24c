"""Service configuration, loaded from a JSON file.

The PAPERSCOPE_CONFIG environment variable overrides the config file path
and nothing else.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, fields
from pathlib import Path

from ..errors import InvalidRequest

ENV_CONFIG_PATH = "PAPERSCOPE_CONFIG"


@dataclass(frozen=True)
class ApiConfig:
    host: str = "127.0.0.1"
    port: int = 8080
    corpus_dir: str = "corpus"
    snapshot_path: str | None = None
    taxonomy_path: str | None = None
    suffix_path: str | None = None
    rules_path: str | None = None
    bm25_k1: float = 1.2
    bm25_b: float = 0.75
    weight_title: float = 3.0
    weight_abstract: float = 2.0
    weight_full_text: float = 1.0
    recent_years: int = 5
    seminal_age: int = 10
    seminal_distinct_years: int = 5
    page_size: int = 20
    similar_k: int = 5
    reingest_interval_seconds: int | None = None
    ui_dir: str | None = None

    def metadata_path(self) -> Path:
        return Path(self.corpus_dir) / "metadata.jsonl"

    def text_dir(self) -> Path:
        return Path(self.corpus_dir) / "texts"

    def refs_dir(self) -> Path:
        return Path(self.corpus_dir) / "refs"


_POSITIVE_FIELDS = (
    "port",
    "bm25_k1",
    "weight_title",
    "weight_abstract",
    "weight_full_text",
    "recent_years",
    "seminal_age",
    "seminal_distinct_years",
    "page_size",
    "similar_k",
)


def validate_config(config: ApiConfig) -> ApiConfig:
    for name in _POSITIVE_FIELDS:
        if getattr(config, name) <= 0:
            raise InvalidRequest(f"config field {name} must be positive")
    if not 0 <= config.bm25_b <= 1:
        raise InvalidRequest("config field bm25_b must be in [0, 1]")
    return config


def load_config(path: str | Path | None) -> ApiConfig:
    resolved = os.environ.get(ENV_CONFIG_PATH) or path
    if resolved is None:
        return validate_config(ApiConfig())
    with open(resolved, encoding="utf-8") as f:
        data = json.load(f)
    if not isinstance(data, dict):
        raise InvalidRequest(f"config file {resolved} must contain an object")
    known = {f.name for f in fields(ApiConfig)}
    unknown = set(data) - known
    if unknown:
        raise InvalidRequest(f"unknown config keys: {sorted(unknown)}")
    return validate_config(ApiConfig(**data))
