"""Independent certificate validation.

Each validator re-checks a certificate against the graph alone, without
reference to how it was constructed, and reports every problem it finds.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from gasketgraph.graph import Coloring, GasketGraph

# Cap on reported problems per certificate
MAX_ERRORS = 20


def _walk_errors(g: GasketGraph, vertices: Sequence[int], closed: bool) -> list[str]:
    errors: list[str] = []
    n = g.vertex_count
    for v in vertices:
        if not 0 <= v < n:
            errors.append(f"Vertex index out of range: {v}")
    if errors:
        return errors

    seen: set[int] = set()
    for v in vertices:
        if v in seen:
            errors.append(f"Vertex repeated: {v} {tuple(g.vertices[v])}")
        seen.add(v)

    steps = list(zip(vertices, vertices[1:]))
    if closed and len(vertices) > 1:
        steps.append((vertices[-1], vertices[0]))
    for u, v in steps:
        if not g.has_edge(u, v):
            errors.append(f"Not an edge: {u}-{v} {tuple(g.vertices[u])}-{tuple(g.vertices[v])}")
    return errors


def validate_path(
    g: GasketGraph,
    vertices: Sequence[int],
    start: int | None = None,
    end: int | None = None,
    length: int | None = None,
    covers: Iterable[int] | None = None,
) -> tuple[bool, list[str]]:
    """
    Validate a simple path.

    Args:
        g: The graph
        vertices: Vertex indices in order
        start: Required first vertex
        end: Required last vertex
        length: Required number of edges
        covers: Exact vertex set the path must visit

    Returns:
        Tuple of (is_valid, list of error messages)
    """
    if not vertices:
        return False, ["Path is empty"]

    errors = _walk_errors(g, vertices, closed=False)
    if start is not None and vertices[0] != start:
        errors.append(f"Path starts at {vertices[0]}, expected {start}")
    if end is not None and vertices[-1] != end:
        errors.append(f"Path ends at {vertices[-1]}, expected {end}")
    if length is not None and len(vertices) - 1 != length:
        errors.append(f"Path has length {len(vertices) - 1}, expected {length}")
    if covers is not None:
        expected = set(covers)
        actual = set(vertices)
        if actual != expected:
            errors.append(
                f"Vertex set mismatch: {len(expected - actual)} missing, {len(actual - expected)} unexpected"
            )
    return not errors, errors[:MAX_ERRORS]


def validate_cycle(
    g: GasketGraph,
    vertices: Sequence[int],
    length: int | None = None,
    covers: Iterable[int] | None = None,
) -> tuple[bool, list[str]]:
    """Validate a simple cycle given as a vertex sequence with an implicit closing edge."""
    if len(vertices) < 3:
        return False, [f"A cycle needs at least 3 vertices, got {len(vertices)}"]

    errors = _walk_errors(g, vertices, closed=True)
    if length is not None and len(vertices) != length:
        errors.append(f"Cycle has length {len(vertices)}, expected {length}")
    if covers is not None and set(vertices) != set(covers):
        errors.append("Cycle does not cover the required vertex set")
    return not errors, errors[:MAX_ERRORS]


def validate_coloring(g: GasketGraph, coloring: Coloring, colors: int = 3) -> tuple[bool, list[str]]:
    """Check that a coloring is proper and uses exactly `colors` colors."""
    errors: list[str] = []
    if len(coloring.assignment) != g.vertex_count:
        return False, [f"Coloring has {len(coloring.assignment)} entries for {g.vertex_count} vertices"]
    for color in set(coloring.assignment):
        if not 0 <= color < colors:
            errors.append(f"Color out of range: {color}")
    for u, v in g.edges():
        if coloring.assignment[u] == coloring.assignment[v]:
            errors.append(f"Edge {u}-{v} is monochromatic (color {coloring.assignment[u]})")
            if len(errors) >= MAX_ERRORS:
                break
    if coloring.colors_used != colors:
        errors.append(f"Uses {coloring.colors_used} colors, expected {colors}")
    return not errors, errors[:MAX_ERRORS]


def undominated(
    g: GasketGraph,
    members: Iterable[int],
    target: Iterable[int],
    helpers: Iterable[int] = (),
) -> list[int]:
    """Target vertices outside every closed neighborhood of members and helpers."""
    covered: set[int] = set()
    for v in (*members, *helpers):
        covered.add(v)
        covered.update(g.adjacency[v])
    return [v for v in target if v not in covered]


def validate_domination(
    g: GasketGraph,
    members: Iterable[int],
    target: Iterable[int],
    helpers: Iterable[int] = (),
) -> tuple[bool, list[str]]:
    """Check that members together with helper corners dominate the target set."""
    missing = undominated(g, list(members), list(target), list(helpers))
    errors = [f"Vertex {v} {tuple(g.vertices[v])} is not dominated" for v in missing]
    return not errors, errors[:MAX_ERRORS]
