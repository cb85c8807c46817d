"""JSON documents for graphs, graph lists and group presentations.

Serialization is canonical: sorted keys and fixed separators, so equal values
give identical bytes.
"""
from __future__ import annotations

import json
from typing import Any, Union

from .graphs import ColoredGraph, DisconnectedGraph, OpenFeynmanGraph, validate
from .pi1 import GroupPresentation

FORMAT_VERSION = 1

Graph = Union[ColoredGraph, OpenFeynmanGraph, DisconnectedGraph]


class GraphFormatError(ValueError):
    pass


def _dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def _loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def graph_to_doc(g: Graph, metadata: dict | None = None) -> dict:
    if isinstance(g, DisconnectedGraph):
        doc = {"format_version": FORMAT_VERSION, "colors": g.rank, "white": g.half_order,
               "components": [graph_to_doc(c) for c in g.components]}
    else:
        doc = {
            "format_version": FORMAT_VERSION,
            "colors": g.rank,
            "white": g.half_order,
            "perms": {str(c): list(p) for c, p in enumerate(g.perms, start=1)},
        }
        if isinstance(g, OpenFeynmanGraph):
            doc["prop0"] = [[w, b] for w, b in g.pairs()]
            if g.amputated:
                metadata = dict(metadata or {}, amputated=True)
    if metadata:
        doc["metadata"] = metadata
    return doc


def _expect_int(value, where: str, low: int = 0) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < low:
        raise GraphFormatError(f"{where}: expected an integer >= {low}, got {value!r}")
    return value


def doc_to_graph(doc: Any, where: str = "") -> Graph:
    pre = f"{where}." if where else ""
    if not isinstance(doc, dict):
        raise GraphFormatError(f"{where or 'document'}: expected an object")
    version = doc.get("format_version", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise GraphFormatError(f"{pre}format_version: unsupported version {version!r}")
    if "colors" not in doc:
        raise GraphFormatError(f"{pre}colors: missing")
    D = _expect_int(doc["colors"], pre + "colors", 1)
    if "components" in doc:
        comps = doc["components"]
        if not isinstance(comps, list):
            raise GraphFormatError(f"{pre}components: expected an array")
        graphs = [doc_to_graph(c, f"{pre}components[{k}]") for k, c in enumerate(comps)]
        for k, c in enumerate(graphs):
            if not isinstance(c, ColoredGraph) or c.rank != D:
                raise GraphFormatError(f"{pre}components[{k}]: expected a closed graph with {D} colors")
        return DisconnectedGraph(D, tuple(graphs))
    p = _expect_int(doc.get("white"), pre + "white")
    perms_doc = doc.get("perms")
    if not isinstance(perms_doc, dict):
        raise GraphFormatError(f"{pre}perms: expected an object keyed by color")
    perms = []
    for c in range(1, D + 1):
        arr = perms_doc.get(str(c))
        if not isinstance(arr, list):
            raise GraphFormatError(f"{pre}perms.{c}: color {c} missing")
        if len(arr) != p:
            raise GraphFormatError(f"{pre}perms.{c}: color {c} has {len(arr)} entries, expected {p}")
        perms.append(tuple(_expect_int(x, f"{pre}perms.{c}[{i}]") for i, x in enumerate(arr)))
    extra = set(perms_doc) - {str(c) for c in range(1, D + 1)}
    if extra:
        raise GraphFormatError(f"{pre}perms: unexpected colors {sorted(extra)}")
    meta = doc.get("metadata") or {}
    if "prop0" in doc:
        pairs = doc["prop0"]
        if not isinstance(pairs, list):
            raise GraphFormatError(f"{pre}prop0: expected an array of pairs")
        prop0 = [None] * p
        for k, pr in enumerate(pairs):
            if not (isinstance(pr, list) and len(pr) == 2):
                raise GraphFormatError(f"{pre}prop0[{k}]: expected [white, black]")
            w = _expect_int(pr[0], f"{pre}prop0[{k}][0]")
            b = _expect_int(pr[1], f"{pre}prop0[{k}][1]")
            if w >= p or b >= p:
                raise GraphFormatError(f"{pre}prop0[{k}]: vertex out of range")
            if prop0[w] is not None:
                raise GraphFormatError(f"{pre}prop0[{k}]: white {w} matched twice")
            prop0[w] = b
        g: Graph = OpenFeynmanGraph(tuple(perms), tuple(prop0), bool(meta.get("amputated", False)))
    else:
        g = ColoredGraph(tuple(perms))
    report = validate(g)
    if not report.ok:
        raise GraphFormatError(f"{where or 'document'}: " + "; ".join(report.problems))
    return g


def dumps(g: Graph, metadata: dict | None = None) -> str:
    return _dumps(graph_to_doc(g, metadata))


def loads(text: str) -> Graph:
    return doc_to_graph(_loads(text))


def load_metadata(text: str) -> dict:
    doc = _loads(text)
    return doc.get("metadata", {}) if isinstance(doc, dict) else {}


def dump_graph_list(graphs) -> str:
    return _dumps({"format_version": FORMAT_VERSION, "graphs": [graph_to_doc(g) for g in graphs]})


def load_graph_list(text: str) -> list:
    doc = _loads(text)
    if not isinstance(doc, dict) or not isinstance(doc.get("graphs"), list):
        raise GraphFormatError("expected an object with a 'graphs' array")
    return [doc_to_graph(d, f"graphs[{k}]") for k, d in enumerate(doc["graphs"])]


def presentation_to_doc(p: GroupPresentation) -> dict:
    return {"format_version": FORMAT_VERSION, "generators": p.generator_count,
            "relators": [list(r) for r in p.relators]}


def doc_to_presentation(doc: Any) -> GroupPresentation:
    if not isinstance(doc, dict):
        raise GraphFormatError("presentation: expected an object")
    n = _expect_int(doc.get("generators"), "generators")
    rels = doc.get("relators", [])
    if not isinstance(rels, list) or not all(isinstance(r, list) for r in rels):
        raise GraphFormatError("relators: expected an array of arrays")
    try:
        return GroupPresentation(n, tuple(tuple(r) for r in rels))
    except (TypeError, ValueError) as exc:
        raise GraphFormatError(f"relators: {exc}") from None


def dumps_presentation(p: GroupPresentation) -> str:
    return _dumps(presentation_to_doc(p))


def loads_presentation(text: str) -> GroupPresentation:
    return doc_to_presentation(_loads(text))
