import json

import pytest

from paperscope.errors import ChecksumMismatch, VersionMismatch
from paperscope.store import (
    FORMAT_VERSION,
    content_digest,
    load_snapshot,
    save_snapshot,
)


@pytest.fixture()
def saved(bundle, tmp_path):
    path = tmp_path / "snapshot.psnap"
    save_snapshot(bundle.as_store(), path)
    return path


def test_round_trip_is_content_equal(bundle, saved):
    loaded = load_snapshot(saved)
    original = bundle.as_store()
    assert loaded.snapshot == original.snapshot
    assert loaded.index == original.index
    assert loaded.assignments == original.assignments
    assert loaded.taxonomy == original.taxonomy
    assert content_digest(loaded.snapshot) == content_digest(original.snapshot)


def test_truncated_file_fails_checksum(saved):
    blob = saved.read_bytes()
    saved.write_bytes(blob[: len(blob) - 200])
    with pytest.raises(ChecksumMismatch):
        load_snapshot(saved)


def test_corrupted_byte_fails_checksum(saved):
    blob = bytearray(saved.read_bytes())
    blob[-10] ^= 0xFF
    saved.write_bytes(bytes(blob))
    with pytest.raises(ChecksumMismatch):
        load_snapshot(saved)


def test_future_format_version_rejected(saved):
    blob = saved.read_bytes()
    header, body = blob.split(b"\n", 1)
    meta = json.loads(header)
    meta["format_version"] = FORMAT_VERSION + 1
    saved.write_bytes(json.dumps(meta).encode() + b"\n" + body)
    with pytest.raises(VersionMismatch):
        load_snapshot(saved)


def test_garbage_header_rejected(saved):
    blob = saved.read_bytes()
    _, body = blob.split(b"\n", 1)
    saved.write_bytes(b"not json\n" + body)
    with pytest.raises(ChecksumMismatch):
        load_snapshot(saved)


def test_headerless_file_rejected(tmp_path):
    path = tmp_path / "bad.psnap"
    path.write_bytes(b"single line no newline")
    with pytest.raises(ChecksumMismatch):
        load_snapshot(path)
