"""Active snapshot state with atomic swap on re-ingest.

Request handlers read ``state.active`` exactly once, so each request is
served entirely from one immutable bundle. Re-ingestion is single-writer:
concurrent triggers coalesce onto the rebuild already in flight.
"""

from __future__ import annotations

import logging
import threading
from dataclasses import dataclass
from pathlib import Path

from ..corpus import CorpusSnapshot, PaperId
from ..errors import IngestFailed, PaperscopeError
from ..index import InvertedIndex, build_index
from ..ingest import CorpusDirectoryLayout, IngestReport, load_corpus, reingest
from ..store import SnapshotStore, load_snapshot, save_snapshot
from ..topics import Taxonomy, TopicAssignment, classify_corpus, default_taxonomy, load_taxonomy
from ..urls import (
    CategoryRules,
    SuffixList,
    default_rules,
    default_suffixes,
    load_category_rules,
    load_suffix_list,
)
from .config import ApiConfig

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ActiveBundle:
    snapshot: CorpusSnapshot
    index: InvertedIndex
    assignments: dict[PaperId, tuple[TopicAssignment, ...]]
    taxonomy: Taxonomy
    suffixes: SuffixList
    rules: CategoryRules

    @property
    def version(self) -> int:
        return self.snapshot.version

    def as_store(self) -> SnapshotStore:
        return SnapshotStore(
            snapshot=self.snapshot,
            index=self.index,
            assignments=self.assignments,
            taxonomy=self.taxonomy,
        )


def corpus_layout(config: ApiConfig) -> CorpusDirectoryLayout:
    return CorpusDirectoryLayout(
        metadata_path=config.metadata_path(),
        text_dir=config.text_dir(),
        refs_dir=config.refs_dir(),
    )


def load_aux(config: ApiConfig) -> tuple[Taxonomy, SuffixList, CategoryRules]:
    taxonomy = (
        load_taxonomy(Path(config.taxonomy_path))
        if config.taxonomy_path
        else default_taxonomy()
    )
    suffixes = (
        load_suffix_list(Path(config.suffix_path))
        if config.suffix_path
        else default_suffixes()
    )
    rules = (
        load_category_rules(Path(config.rules_path))
        if config.rules_path
        else default_rules()
    )
    return taxonomy, suffixes, rules


def bundle_from_snapshot(
    snapshot: CorpusSnapshot,
    taxonomy: Taxonomy,
    suffixes: SuffixList,
    rules: CategoryRules,
) -> ActiveBundle:
    assignments = classify_corpus(snapshot, taxonomy)
    index = build_index(snapshot, subtopics=taxonomy.subtopic_pairs())
    return ActiveBundle(
        snapshot=snapshot,
        index=index,
        assignments=assignments,
        taxonomy=taxonomy,
        suffixes=suffixes,
        rules=rules,
    )


def build_bundle(config: ApiConfig) -> tuple[ActiveBundle, IngestReport]:
    """Fresh build from the corpus directory named in the config."""
    taxonomy, suffixes, rules = load_aux(config)
    snapshot, report = load_corpus(corpus_layout(config))
    return bundle_from_snapshot(snapshot, taxonomy, suffixes, rules), report


class ServiceState:
    def __init__(self, config: ApiConfig, bundle: ActiveBundle):
        self.config = config
        self._active = bundle
        self._write_lock = threading.Lock()

    @classmethod
    def from_config(cls, config: ApiConfig) -> "ServiceState":
        """Load the persisted store if configured and present, else build
        from the corpus directory (persisting when a path is configured)."""
        taxonomy, suffixes, rules = load_aux(config)
        if config.snapshot_path and Path(config.snapshot_path).is_file():
            store = load_snapshot(Path(config.snapshot_path))
            logger.info("loaded snapshot v%d from %s", store.snapshot.version, config.snapshot_path)
            bundle = ActiveBundle(
                snapshot=store.snapshot,
                index=store.index,
                assignments=store.assignments,
                taxonomy=store.taxonomy,
                suffixes=suffixes,
                rules=rules,
            )
            return cls(config, bundle)
        bundle, _report = build_bundle(config)
        if config.snapshot_path:
            save_snapshot(bundle.as_store(), Path(config.snapshot_path))
        return cls(config, bundle)

    @property
    def active(self) -> ActiveBundle:
        return self._active

    def trigger_reingest(self) -> ActiveBundle:
        """Rebuild from the corpus directory and swap atomically.

        On any failure the previous bundle stays active. A trigger that
        arrives while a rebuild is running waits and then returns the
        fresh bundle without rebuilding again.
        """
        version_seen = self._active.version
        with self._write_lock:
            current = self._active
            if current.version > version_seen:
                return current
            try:
                snapshot, _report = reingest(corpus_layout(self.config), current.snapshot)
                new_bundle = bundle_from_snapshot(
                    snapshot, current.taxonomy, current.suffixes, current.rules
                )
                if self.config.snapshot_path:
                    save_snapshot(new_bundle.as_store(), Path(self.config.snapshot_path))
            except PaperscopeError as exc:
                raise IngestFailed(f"re-ingest failed, keeping v{current.version}: {exc}") from exc
            self._active = new_bundle
            logger.info("swapped to snapshot v%d", new_bundle.version)
            return new_bundle
