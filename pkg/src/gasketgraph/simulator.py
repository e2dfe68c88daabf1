"""Desk-scale pebbling simulator.

A configuration is a count vector in vertex order. A move takes two pebbles
from a vertex and puts one on a neighbor, so every move lowers the weight by
one and any move sequence is finite. Reachability and cover solvability are
decided by depth-first search over configurations, memoized on the full count
vector; each success records the move that leads to it, so a witness move
sequence can be replayed afterwards.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from pathlib import Path
from typing import TYPE_CHECKING, Iterator, Mapping, Sequence, Union

from gasketgraph.config import load_settings
from gasketgraph.errors import IllegalMoveError, ParseError, SearchBudgetError
from gasketgraph.graph import CORNERS, GasketGraph
from gasketgraph.pebbling import bfs_distances

if TYPE_CHECKING:
    import networkx as nx

logger = logging.getLogger(__name__)

Adjacency = Sequence[Sequence[int]]
Move = tuple[int, int]
GraphLike = Union[GasketGraph, "nx.Graph", Adjacency]


def as_adjacency(graph: GraphLike) -> tuple[tuple[int, ...], ...]:
    """Adjacency lists for a GasketGraph, a networkx graph or raw lists."""
    if isinstance(graph, GasketGraph):
        return graph.adjacency
    if hasattr(graph, "nodes") and hasattr(graph, "adj"):
        nodes = sorted(graph.nodes)
        index = {v: i for i, v in enumerate(nodes)}
        return tuple(tuple(sorted(index[u] for u in graph.adj[v])) for v in nodes)
    return tuple(tuple(nbrs) for nbrs in graph)


@dataclass(frozen=True)
class PebbleConfiguration:
    """Pebble counts per vertex."""

    counts: tuple[int, ...]

    @property
    def weight(self) -> int:
        return sum(self.counts)

    @classmethod
    def stack(cls, vertex_count: int, vertex: int, pebbles: int) -> "PebbleConfiguration":
        counts = [0] * vertex_count
        counts[vertex] = pebbles
        return cls(tuple(counts))

    @classmethod
    def from_mapping(cls, vertex_count: int, mapping: Mapping[int, int]) -> "PebbleConfiguration":
        counts = [0] * vertex_count
        for vertex, pebbles in mapping.items():
            if not 0 <= vertex < vertex_count:
                raise ParseError(f"Vertex {vertex} is not in a graph with {vertex_count} vertices")
            if pebbles < 0:
                raise ParseError(f"Negative pebble count on vertex {vertex}")
            counts[vertex] += pebbles
        return cls(tuple(counts))

    def to_mapping(self) -> dict[int, int]:
        return {v: c for v, c in enumerate(self.counts) if c}


def apply_move(adjacency: GraphLike, config: PebbleConfiguration, source: int, target: int) -> PebbleConfiguration:
    """Remove two pebbles from source and place one on the adjacent target."""
    adj = as_adjacency(adjacency)
    if config.counts[source] < 2:
        raise IllegalMoveError(f"Vertex {source} holds {config.counts[source]} pebble(s); a move needs 2")
    if target not in adj[source]:
        raise IllegalMoveError(f"Vertices {source} and {target} are not adjacent")
    counts = list(config.counts)
    counts[source] -= 2
    counts[target] += 1
    return PebbleConfiguration(tuple(counts))


def replay(adjacency: GraphLike, config: PebbleConfiguration, moves: Sequence[Move]) -> PebbleConfiguration:
    """Apply a move sequence, raising IllegalMoveError on the first bad move."""
    adj = as_adjacency(adjacency)
    for source, target in moves:
        config = apply_move(adj, config, source, target)
    return config


def configurations(vertex_count: int, weight: int) -> Iterator[PebbleConfiguration]:
    """Every configuration of the given weight (stars and bars), in a fixed order."""
    for placement in combinations_with_replacement(range(vertex_count), weight):
        counts = [0] * vertex_count
        for v in placement:
            counts[v] += 1
        yield PebbleConfiguration(tuple(counts))


class PebblingSimulator:
    """Memoized pebbling searches on one small graph."""

    def __init__(
        self,
        graph: GraphLike,
        max_vertices: int | None = None,
        max_weight: int | None = None,
    ) -> None:
        settings = load_settings()
        self.adjacency = as_adjacency(graph)
        self.max_vertices = max_vertices or settings["pebble_max_vertices"]
        self.max_weight = max_weight or settings["pebble_max_weight"]
        if len(self.adjacency) > self.max_vertices:
            raise SearchBudgetError(
                f"Exhaustive pebbling search is limited to {self.max_vertices} vertices, "
                f"graph has {len(self.adjacency)}"
            )
        self._dist: dict[int, tuple[list[int], int]] = {}
        # state -> winning move, or None when the state is lost
        self._reach_memo: dict[tuple[tuple[int, ...], int], Move | None] = {}
        self._cover_memo: dict[tuple[int, ...], Move | None] = {}

    def _check(self, config: PebbleConfiguration) -> tuple[int, ...]:
        if len(config.counts) != len(self.adjacency):
            raise ParseError(f"Configuration has {len(config.counts)} entries for {len(self.adjacency)} vertices")
        if config.weight > self.max_weight:
            raise SearchBudgetError(f"Weight {config.weight} exceeds the search budget of {self.max_weight}")
        return config.counts

    def _successors(self, counts: tuple[int, ...]) -> Iterator[tuple[Move, tuple[int, ...]]]:
        for v, pebbles in enumerate(counts):
            if pebbles < 2:
                continue
            for u in self.adjacency[v]:
                nxt = list(counts)
                nxt[v] -= 2
                nxt[u] += 1
                yield (v, u), tuple(nxt)

    def _potential_ok(self, counts: tuple[int, ...], target: int) -> bool:
        # sum of c(v) 2^-d(v, target) never grows under a move and is >= 1 once target holds a pebble
        if target not in self._dist:
            row = bfs_distances(self.adjacency, target)
            self._dist[target] = (row, max(row))
        dist, scale = self._dist[target]
        potential = sum(c << (scale - dist[v]) for v, c in enumerate(counts) if c and dist[v] >= 0)
        return potential >= 1 << scale

    def _reach(self, counts: tuple[int, ...], target: int) -> bool:
        if counts[target]:
            return True
        if not self._potential_ok(counts, target):
            return False
        key = (counts, target)
        if key in self._reach_memo:
            return self._reach_memo[key] is not None
        winning: Move | None = None
        for move, nxt in self._successors(counts):
            if self._reach(nxt, target):
                winning = move
                break
        self._reach_memo[key] = winning
        return winning is not None

    def _cover(self, counts: tuple[int, ...]) -> bool:
        if 0 not in counts:
            return True
        if counts in self._cover_memo:
            return self._cover_memo[counts] is not None
        winning: Move | None = None
        # a covered graph holds at least one pebble per vertex and moves only lose pebbles
        if sum(counts) >= len(counts):
            for move, nxt in self._successors(counts):
                if self._cover(nxt):
                    winning = move
                    break
        self._cover_memo[counts] = winning
        return winning is not None

    def is_reachable(self, config: PebbleConfiguration, target: int) -> bool:
        return self._reach(self._check(config), target)

    def reach_moves(self, config: PebbleConfiguration, target: int) -> list[Move] | None:
        """A move sequence putting a pebble on target, or None."""
        counts = self._check(config)
        if not self._reach(counts, target):
            return None
        moves: list[Move] = []
        while not counts[target]:
            move = self._reach_memo[(counts, target)]
            assert move is not None
            moves.append(move)
            counts = apply_move(self.adjacency, PebbleConfiguration(counts), *move).counts
        return moves

    def is_cover_solvable(self, config: PebbleConfiguration) -> bool:
        return self._cover(self._check(config))

    def cover_moves(self, config: PebbleConfiguration) -> list[Move] | None:
        """A move sequence leaving a pebble on every vertex, or None."""
        counts = self._check(config)
        if not self._cover(counts):
            return None
        moves: list[Move] = []
        while 0 in counts:
            move = self._cover_memo[counts]
            assert move is not None
            moves.append(move)
            counts = apply_move(self.adjacency, PebbleConfiguration(counts), *move).counts
        return moves

    def is_pebbleable(self, config: PebbleConfiguration) -> bool:
        """Every vertex is reachable (each on its own)."""
        counts = self._check(config)
        return all(self._reach(counts, v) for v in range(len(counts)))

    def pebbling_number(self) -> int:
        """Least t such that every weight-t configuration reaches every vertex."""
        n = len(self.adjacency)
        for t in range(1, self.max_weight + 1):
            failure = next((c for c in configurations(n, t) if not self.is_pebbleable(c)), None)
            if failure is None:
                logger.debug("pi found at t=%d, %d reach states memoized", t, len(self._reach_memo))
                return t
            logger.debug("t=%d fails on %s", t, failure.counts)
        raise SearchBudgetError(f"No pebbling number found up to weight {self.max_weight}")

    @property
    def memo_size(self) -> int:
        return len(self._reach_memo) + len(self._cover_memo)


def is_reachable(graph: GraphLike, config: PebbleConfiguration, target: int) -> bool:
    """Reachability is bounded by the weight budget only, not by graph size."""
    adjacency = as_adjacency(graph)
    return PebblingSimulator(adjacency, max_vertices=len(adjacency)).is_reachable(config, target)


def is_cover_solvable(graph: GraphLike, config: PebbleConfiguration) -> bool:
    return PebblingSimulator(graph).is_cover_solvable(config)


def pebbling_number_search(graph: GraphLike) -> int:
    return PebblingSimulator(graph).pebbling_number()


@dataclass
class SweepReport:
    """Result of checking every configuration of one weight."""

    weight: int
    total: int = 0
    unsolvable: list[PebbleConfiguration] = field(default_factory=list)

    @property
    def all_solvable(self) -> bool:
        return not self.unsolvable


def cover_sweep(graph: GraphLike, weight: int, simulator: PebblingSimulator | None = None) -> SweepReport:
    """Decide cover solvability for every configuration of `weight`."""
    sim = simulator or PebblingSimulator(graph)
    report = SweepReport(weight=weight)
    for config in configurations(len(sim.adjacency), weight):
        report.total += 1
        if not sim.is_cover_solvable(config):
            report.unsolvable.append(config)
    logger.debug("cover sweep w=%d: %d configurations, memo %d", weight, report.total, sim.memo_size)
    return report


def parse_configuration(source: str, g: GasketGraph) -> PebbleConfiguration:
    """Read "stack:C:t" (C a corner label or vertex index) or a JSON file {index: count}."""
    if source.startswith("stack:"):
        parts = source.split(":")
        if len(parts) != 3:
            raise ParseError(f"Expected stack:CORNER:COUNT, got {source!r}")
        _, where, count = parts
        try:
            pebbles = int(count)
            vertex = g.corner(where) if where.strip().upper() in CORNERS else int(where)
        except ValueError:
            raise ParseError(f"Cannot parse stack shorthand {source!r}")
        if pebbles < 0 or not 0 <= vertex < g.vertex_count:
            raise ParseError(f"Stack shorthand {source!r} is out of range for S{g.level}")
        return PebbleConfiguration.stack(g.vertex_count, vertex, pebbles)

    path = Path(source)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise ParseError(f"Cannot read configuration {source}: {e}")
    if not isinstance(data, dict):
        raise ParseError("Configuration JSON must be an object {vertex_index: count}")
    try:
        mapping = {int(k): int(v) for k, v in data.items()}
    except (TypeError, ValueError):
        raise ParseError("Configuration keys and values must be integers")
    return PebbleConfiguration.from_mapping(g.vertex_count, mapping)
