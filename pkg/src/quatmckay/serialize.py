"""Byte-stable JSON and DOT output for groups, graphs and reports."""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .groups import FiniteSubgroup
from .mckay import McKayGraph, Vertex


def _write(text: str, destination) -> int:
    data = text.encode("utf-8")
    if destination is None:
        return len(data)
    if hasattr(destination, "write"):
        destination.write(text)
        return len(data)
    Path(destination).write_bytes(data)
    return len(data)


def _float17(x: float) -> str:
    return f"{float(x) + 0.0:.17g}"


def group_json(g: FiniteSubgroup) -> str:
    rows = ",\n".join("    [" + ", ".join(_float17(x) for x in row) + "]" for row in g.elements)
    gens = ", ".join(str(int(i)) for i in g.generator_indices)
    return (
        "{\n"
        f'  "order": {g.order},\n'
        f'  "ambient": {json.dumps(g.ambient)},\n'
        f'  "elements": [\n{rows}\n  ],\n'
        f'  "generators": [{gens}]\n'
        "}\n"
    )


def emit_group_json(g: FiniteSubgroup, destination=None) -> int:
    return _write(group_json(g), destination)


def graph_to_dict(graph: McKayGraph) -> dict:
    return {
        "dim_w": graph.dim_w,
        "vertices": [{"id": v.id, "dim": v.dim, "parity": v.parity, "trivial": v.trivial} for v in graph.vertices],
        "edges": [{"u": u, "v": v, "color": k, "mult": m} for u, v, k, m in graph.edges()],
    }


def graph_json(graph: McKayGraph) -> str:
    return json.dumps(graph_to_dict(graph), indent=2) + "\n"


def emit_graph_json(graph: McKayGraph, destination=None) -> int:
    """Write the graph schema; returns the number of bytes."""
    return _write(graph_json(graph), destination)


def graph_from_dict(data: dict) -> McKayGraph:
    verts = [Vertex(int(v["id"]), int(v["dim"]), v["parity"], bool(v["trivial"])) for v in data["vertices"]]
    if [v.id for v in verts] != list(range(len(verts))):
        raise ValueError("vertex ids must be 0..n-1 in order")
    n = len(verts)
    dim_w = int(data["dim_w"])
    colors = {k: np.zeros((n, n), dtype=np.int64) for k in ((1,) if dim_w == 2 else (1, 2))}
    for e in data["edges"]:
        u, v, k, m = int(e["u"]), int(e["v"]), int(e["color"]), int(e["mult"])
        if k not in colors:
            raise ValueError(f"colour {k} not allowed when dim_w = {dim_w}")
        colors[k][u, v] += m
        if u != v:
            colors[k][v, u] += m
    return McKayGraph(verts, dim_w, colors)


def read_graph_json(source) -> McKayGraph:
    if hasattr(source, "read"):
        return graph_from_dict(json.load(source))
    return graph_from_dict(json.loads(Path(source).read_text(encoding="utf-8")))


_EDGE_STYLE = {1: 'color="red", style="solid"', 2: 'color="blue", style="dashed"'}


def dot(graph: McKayGraph, name: str = "mckay") -> str:
    """Undirected DOT: one line per unit of multiplicity."""
    lines = [f"graph {json.dumps(name)} {{"]
    for v in graph.vertices:
        attrs = [f'label="d={v.dim}"']
        if v.trivial:
            attrs.append('shape="doublecircle"')
        else:
            attrs.append('shape="circle"')
        if v.parity == 1:
            attrs.append('style="filled"')
        lines.append(f"  v{v.id} [{', '.join(attrs)}];")
    for u, v, k, m in graph.edges():
        style = 'color="black", style="solid"' if graph.dim_w == 2 else _EDGE_STYLE[k]
        lines.extend(f"  v{u} -- v{v} [{style}];" for _ in range(m))
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_dot(graph: McKayGraph, destination=None, name: str = "mckay") -> int:
    return _write(dot(graph, name), destination)


def report_json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=False) + "\n"
