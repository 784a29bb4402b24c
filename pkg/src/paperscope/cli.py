"""Command-line entry points.

``ingest`` and ``serve`` run locally against the corpus directory; the
remaining subcommands are thin HTTP clients of a running service.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

import httpx

from .errors import PaperscopeError
from .service.config import load_config
from .store import save_snapshot

DEFAULT_SERVICE_URL = "http://127.0.0.1:8080"


def cmd_ingest(args) -> int:
    from .service.config import ApiConfig
    from .service.state import build_bundle

    config = ApiConfig(
        corpus_dir=args.corpus,
        taxonomy_path=args.taxonomy,
        suffix_path=args.suffixes,
        rules_path=args.rules,
    )
    bundle, report = build_bundle(config)
    save_snapshot(bundle.as_store(), Path(args.out))
    print(
        json.dumps(
            {
                "snapshot": args.out,
                "papers_loaded": report.papers_loaded,
                "texts_attached": report.texts_attached,
                "references_seen": report.references_seen,
                "references_resolved": report.references_resolved,
                "urls_extracted": report.urls_extracted,
                "warnings": len(report.warnings),
            },
            indent=2,
        )
    )
    for file, message in report.warnings:
        print(f"warning: {file}: {message}", file=sys.stderr)
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service.app import create_app_from_config

    config = load_config(args.config)
    app = create_app_from_config(config)
    uvicorn.run(app, host=config.host, port=config.port, log_level="info")
    return 0


def _client_get(args, path: str, params: dict) -> int:
    with httpx.Client(base_url=args.url, timeout=60.0) as client:
        response = client.get(path, params=params)
    print(json.dumps(response.json(), indent=2))
    return 0 if response.is_success else 1


def cmd_search(args) -> int:
    params = {"q": args.q, "domain": args.domain, "page": args.page}
    if args.page_size:
        params["page_size"] = args.page_size
    return _client_get(args, "/api/search", params)


def cmd_stats(args) -> int:
    return _client_get(args, f"/api/lists/{args.kind}", {"k": args.k})


def cmd_reingest(args) -> int:
    with httpx.Client(base_url=args.url, timeout=600.0) as client:
        response = client.post("/api/admin/reingest")
    print(json.dumps(response.json(), indent=2))
    return 0 if response.is_success else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paperscope", description="Scholarly-corpus exploration engine"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="build a snapshot from a corpus directory")
    p.add_argument("--corpus", required=True, help="corpus directory")
    p.add_argument("--out", required=True, help="output snapshot file")
    p.add_argument("--taxonomy", help="taxonomy JSON file")
    p.add_argument("--suffixes", help="public suffix JSON file")
    p.add_argument("--rules", help="URL category rules JSON file")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("serve", help="run the REST API service")
    p.add_argument("--config", help="config JSON file (or PAPERSCOPE_CONFIG)")
    p.set_defaults(func=cmd_serve)

    p = sub.add_parser("search", help="query a running service")
    p.add_argument("--q", required=True, help="query text")
    p.add_argument("--domain", default="Papers", help="search domain")
    p.add_argument("--page", type=int, default=1)
    p.add_argument("--page-size", type=int, dest="page_size")
    p.add_argument("--url", default=DEFAULT_SERVICE_URL, help="service base URL")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("stats", help="fetch a ranked list from a running service")
    p.add_argument("--kind", required=True, help="ranked list kind")
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--url", default=DEFAULT_SERVICE_URL, help="service base URL")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("reingest", help="trigger re-ingestion on a running service")
    p.add_argument("--url", default=DEFAULT_SERVICE_URL, help="service base URL")
    p.set_defaults(func=cmd_reingest)

    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PaperscopeError as exc:
        print(f"error [{exc.error_code}]: {exc}", file=sys.stderr)
        return 1
    except httpx.HTTPError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
