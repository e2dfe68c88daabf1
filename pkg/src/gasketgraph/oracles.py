"""Exhaustive enumerators used to cross-check the constructive certificates.

These rely only on networkx's simple path and cycle enumeration, so they share
no code with the recursive constructions they check. Tractable up to S3.
"""

from __future__ import annotations

import networkx as nx

from gasketgraph.graph import GasketGraph

# 15 vertices; S4 path enumeration is already out of desk-scale reach
ORACLE_MAX_LEVEL = 3


def _graph(g: GasketGraph, excluded: set[int] | None = None) -> nx.Graph:
    graph = g.to_networkx()
    if excluded:
        graph.remove_nodes_from(excluded)
    return graph


def achievable_path_lengths(g: GasketGraph, start: int, end: int, avoid: int | None = None) -> set[int]:
    """Edge counts of all simple paths from start to end, optionally avoiding a vertex."""
    graph = _graph(g, {avoid} if avoid is not None else None)
    return {len(p) - 1 for p in nx.all_simple_paths(graph, start, end)}


def achievable_cycle_lengths(g: GasketGraph) -> set[int]:
    """Lengths of all simple cycles."""
    return {len(c) for c in nx.simple_cycles(_graph(g))}


def count_hamiltonian_paths(g: GasketGraph, start: int, end: int) -> int:
    target = g.vertex_count
    return sum(1 for p in nx.all_simple_paths(_graph(g), start, end) if len(p) == target)


def count_hamiltonian_cycles(g: GasketGraph) -> int:
    target = g.vertex_count
    return sum(1 for c in nx.simple_cycles(_graph(g), length_bound=target) if len(c) == target)
