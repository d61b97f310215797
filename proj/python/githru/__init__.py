"""Python bindings for the githru git history analysis engine."""

import json

from ._core import (
    GithruError,
    Service,
    Snapshot,
    classify_commit_type,
    graph_json,
    ingest_log,
    load_snapshot,
    tokenize,
)

__all__ = [
    "GithruError",
    "Service",
    "Snapshot",
    "classify_commit_type",
    "graph",
    "graph_json",
    "ingest_log",
    "load_snapshot",
    "request",
    "tokenize",
]


def graph(snapshot, **params):
    """Graph response as a dict. Keyword names follow the HTTP query names."""
    return json.loads(graph_json(snapshot, params))


def request(service, method, path, query=None, body=None):
    """Sends one request to a Service and returns (status, decoded JSON)."""
    pairs = []
    for key, value in (query or {}).items():
        values = value if isinstance(value, (list, tuple)) else [value]
        for v in values:
            pairs.append((key, str(v).lower() if isinstance(v, bool) else str(v)))
    text = body if isinstance(body, str) or body is None else json.dumps(body)
    status, payload = service.handle(method, path, pairs, text or "")
    return status, json.loads(payload)
