"""Serialization of gasket graphs: DOT, JSON and edge lists."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Literal

from gasketgraph.errors import ParseError
from gasketgraph.graph import (
    CORNERS,
    Coord,
    GasketGraph,
    corner_coord,
    edge_count,
    from_edges,
    side_length,
    vertex_count,
)

ExportFormat = Literal["dot", "json", "edgelist"]
FORMATS: tuple[ExportFormat, ...] = ("dot", "json", "edgelist")


def to_dict(g: GasketGraph) -> dict:
    return {
        "level": g.level,
        "side": g.side,
        "vertex_count": g.vertex_count,
        "edge_count": g.edge_count,
        "vertices": [[c.a, c.b] for c in g.vertices],
        "edges": [[u, v] for u, v in g.edges()],
        "corners": list(g.corners),
        "middles": list(g.middles),
    }


def _dot(g: GasketGraph) -> str:
    lines = [f"graph S{g.level} {{", "  node [shape=point];"]
    for i, c in enumerate(g.vertices):
        lines.append(f'  {i} [pos="{c.a},{c.b}!"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export(g: GasketGraph, fmt: ExportFormat) -> bytes:
    """Deterministic serialization in canonical vertex order."""
    if fmt == "json":
        text = json.dumps(to_dict(g), indent=2) + "\n"
    elif fmt == "dot":
        text = _dot(g)
    elif fmt == "edgelist":
        text = "".join(f"{u} {v}\n" for u, v in g.edges())
    else:
        raise ParseError(f"Unknown export format {fmt!r}; expected one of {', '.join(FORMATS)}")
    return text.encode("utf-8")


def write_export(g: GasketGraph, fmt: ExportFormat, path: Path) -> None:
    """Write an export to a file; OSError propagates for unwritable sinks."""
    with open(path, "wb") as f:
        f.write(export(g, fmt))


def parse(data: bytes | str) -> GasketGraph:
    """Rebuild a graph from its JSON export."""
    try:
        payload = json.loads(data)
        level = int(payload["level"])
        vertices = [Coord(int(a), int(b)) for a, b in payload["vertices"]]
        edges = [(vertices[i], vertices[j]) for i, j in payload["edges"]]
    except (json.JSONDecodeError, KeyError, TypeError, ValueError, IndexError) as e:
        raise ParseError(f"Not a gasket graph export: {e}")

    if level < 1:
        raise ParseError(f"Level must be >= 1, got {level}")
    if payload.get("side", side_length(level)) != side_length(level):
        raise ParseError(f"Side {payload['side']} does not match level {level}")
    if len(vertices) != vertex_count(level) or len(edges) != edge_count(level):
        raise ParseError(
            f"S{level} has {vertex_count(level)} vertices and {edge_count(level)} edges, "
            f"got {len(vertices)} and {len(edges)}"
        )
    g = from_edges(level, edges)
    if list(g.vertices) != vertices:
        raise ParseError("Vertex list is not in canonical order or contains isolated vertices")
    missing = [label for label in CORNERS if corner_coord(g.side, label) not in g]
    if missing:
        raise ParseError(f"Corners {', '.join(missing)} of S{level} are missing")
    return g
