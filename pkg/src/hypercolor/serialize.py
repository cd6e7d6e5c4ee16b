"""JSON forms of hypergraphs and colorings.

Hypergraph::

    {"universe": {"window": n} | "naturals",
     "repr": "set" | "seq" | "charfn",
     "edges": [{"finite": [..]} | {"tail": j} | {"charfn": {"table": [..], "bound": b}}],
     "labels": [...],   # optional, gadget outputs
     "meta": {...}}     # optional, gadget parameters

Coloring::

    {"k": k, "prefix": [..], "period": [..]}

Edge order is kept as given.
"""

from __future__ import annotations

import json
from typing import Any

from .colorings import Coloring
from .errors import HypercolorError, Unbounded
from .hypergraph import CharFn, Finite, Hypergraph, Repr, TailFrom


class ParseError(HypercolorError, ValueError):
    pass


def _listify(x):
    if isinstance(x, (tuple, list)):
        return [_listify(y) for y in x]
    return x


def _tuplify(x):
    if isinstance(x, list):
        return tuple(_tuplify(y) for y in x)
    return x


def edge_to_json(e) -> dict:
    if isinstance(e, Finite):
        return {"finite": list(e.vertices)}
    if isinstance(e, TailFrom):
        return {"tail": e.start}
    if e.bound is not None:
        return {"charfn": {"table": list(e.tabulate()), "bound": e.bound}}
    if e.table is None:
        raise Unbounded()
    return {"charfn": {"table": list(e.table), "bound": None}}


def edge_from_json(d: dict):
    if not isinstance(d, dict) or len(d) != 1:
        raise ParseError(f"edge must be a one-key object, got {d!r}")
    (key, val), = d.items()
    if key == "finite":
        return Finite.of(val)
    if key == "tail":
        return TailFrom(int(val))
    if key == "charfn":
        return CharFn(tuple(val.get("table", ())), val.get("bound"))
    raise ParseError(f"unknown edge kind {key!r}")


def hypergraph_to_json(h: Hypergraph) -> dict:
    out: dict[str, Any] = {
        "universe": "naturals" if h.window is None else {"window": h.window},
        "repr": h.repr.value,
        "edges": [edge_to_json(e) for e in h.edges],
    }
    if h.labels is not None:
        out["labels"] = _listify(h.labels)
    if h.meta is not None:
        out["meta"] = {k: _listify(v) for k, v in dict(h.meta).items()}
    return out


def hypergraph_from_json(d: dict) -> Hypergraph:
    try:
        uni = d["universe"]
        window = None if uni == "naturals" else int(uni["window"])
        edges = tuple(edge_from_json(e) for e in d["edges"])
        labels = _tuplify(d["labels"]) if d.get("labels") is not None else None
        meta = {k: _tuplify(v) for k, v in d["meta"].items()} if d.get("meta") is not None else None
        return Hypergraph(edges, Repr(d["repr"]), window, labels, meta)
    except HypercolorError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed hypergraph JSON: {exc}") from exc


def coloring_to_json(c: Coloring) -> dict:
    return {"k": c.k, "prefix": list(c.prefix), "period": list(c.period)}


def coloring_from_json(d: dict) -> Coloring:
    try:
        return Coloring(int(d["k"]), tuple(d.get("prefix", ())), tuple(d.get("period", ())))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed coloring JSON: {exc}") from exc


def dumps(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True)


def load_hypergraph(path) -> Hypergraph:
    with open(path) as fh:
        try:
            return hypergraph_from_json(json.load(fh))
        except json.JSONDecodeError as exc:
            raise ParseError(str(exc)) from exc


def load_coloring(path) -> Coloring:
    with open(path) as fh:
        try:
            return coloring_from_json(json.load(fh))
        except json.JSONDecodeError as exc:
            raise ParseError(str(exc)) from exc
