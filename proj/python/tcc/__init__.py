"""Tile-built graphs: construction, domination and independence bounds, crossing-criticality."""

import json

from . import _core
from ._core import (
    GuardError,
    IoError,
    ParseError,
    TccError,
    ValidationError,
    VerificationError,
    alpha,
    catalog_text,
    family,
    gamma,
    parse,
)

__all__ = [
    "GuardError",
    "IoError",
    "ParseError",
    "TccError",
    "ValidationError",
    "VerificationError",
    "alpha",
    "bounds",
    "build",
    "catalog_text",
    "family",
    "gamma",
    "parse",
    "sweep",
    "to_dot",
    "verify_critical",
]


def build(signature):
    """Graph of a signature as a dict with vertex names and edges."""
    return json.loads(_core.graph_json(signature))


def to_dot(signature):
    return _core.graph_dot(signature)


def bounds(signature, exact=False, max_nodes=None, max_seconds=None):
    kwargs = {k: v for k, v in (("max_nodes", max_nodes), ("max_seconds", max_seconds)) if v is not None}
    return json.loads(_core.bounds_json(signature, exact, **kwargs))


def verify_critical(signature=None, *, order=None, edges=None):
    """Checks a signature's graph, or a plain graph given as order and edge list."""
    if signature is not None:
        return json.loads(_core.critical_json(signature))
    if order is None or edges is None:
        raise ValueError("pass a signature or both order and edges")
    return json.loads(_core.critical_graph_json(order, [tuple(e) for e in edges]))


def sweep(tiles, samples, seed=0, start=0, threads=0, check_critical=False):
    return [json.loads(line) for line in _core.sweep_jsonl(tiles, samples, seed, start, threads, check_critical)]
