"""Sierpinski gasket graphs on integer lattice coordinates.

S1 is the unit triangle {(0,0), (1,0), (0,1)}. S(n+1) is the union of three
copies of Sn translated by (0,0), (2^(n-1),0) and (0,2^(n-1)); copies share
their touching corners. Corners are L=(0,0), R=(s,0), T=(0,s) with s=2^(n-1).
"""

from __future__ import annotations

import logging
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import TYPE_CHECKING, Iterator, Literal, NamedTuple

from gasketgraph.errors import CornerError, DomainError, NoSubcopyError, SizeLimitError

if TYPE_CHECKING:
    import networkx as nx

logger = logging.getLogger(__name__)

Corner = Literal["T", "L", "R"]
CORNERS: tuple[Corner, ...] = ("T", "L", "R")

# Copy offsets in units of half the side
_COPY_SHIFT: dict[str, tuple[int, int]] = {"L": (0, 0), "R": (1, 0), "T": (0, 1)}


class Coord(NamedTuple):
    """A lattice point (a, b) with a, b >= 0 and a + b <= side."""

    a: int
    b: int

    def shift(self, da: int, db: int) -> "Coord":
        return Coord(self.a + da, self.b + db)


def parse_corner(label: str) -> Corner:
    """Normalize a corner label ("t", "L", ...) or raise CornerError."""
    normalized = label.strip().upper()
    if normalized not in CORNERS:
        raise CornerError(f"Unknown corner {label!r}; expected one of T, L, R")
    return normalized  # type: ignore[return-value]


def third_corner(first: Corner, second: Corner) -> Corner:
    """The corner that is neither `first` nor `second`."""
    if first == second:
        raise CornerError(f"Corners must differ, got {first} twice")
    return next(c for c in CORNERS if c not in (first, second))


def corner_coord(side: int, label: Corner, origin: Coord = Coord(0, 0)) -> Coord:
    """Coordinate of a corner of a gasket with the given side placed at `origin`."""
    if label == "L":
        return origin
    if label == "R":
        return origin.shift(side, 0)
    return origin.shift(0, side)


def copy_origin(side: int, label: Corner, origin: Coord = Coord(0, 0)) -> Coord:
    """Origin of the sub-copy containing corner `label`."""
    da, db = _COPY_SHIFT[label]
    half = side // 2
    return origin.shift(da * half, db * half)


def side_length(n: int) -> int:
    return 1 << (n - 1)


def vertex_count(n: int) -> int:
    """|V(Sn)| = (3/2)(3^(n-1) + 1)."""
    if n < 1:
        raise DomainError(f"Level must be >= 1, got {n}")
    return 3 * (3 ** (n - 1) + 1) // 2


def edge_count(n: int) -> int:
    """|E(Sn)| = 3^n."""
    if n < 1:
        raise DomainError(f"Level must be >= 1, got {n}")
    return 3**n


@dataclass(frozen=True)
class GasketGraph:
    """An immutable Sn with vertices in canonical order (b descending, a ascending)."""

    level: int
    side: int
    vertices: tuple[Coord, ...]
    adjacency: tuple[tuple[int, ...], ...]
    _index: dict[Coord, int] = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self) -> None:
        if not self._index:
            object.__setattr__(self, "_index", {c: i for i, c in enumerate(self.vertices)})

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def index_of(self, coord: tuple[int, int]) -> int:
        try:
            return self._index[Coord(*coord)]
        except KeyError:
            raise KeyError(f"{tuple(coord)} is not a vertex of S{self.level}") from None

    def __contains__(self, coord: object) -> bool:
        return coord in self._index

    def corner(self, label: Corner | str) -> int:
        return self.index_of(corner_coord(self.side, parse_corner(label)))

    @property
    def corners(self) -> tuple[int, int, int]:
        """Corner indices in T, L, R order."""
        return tuple(self.corner(c) for c in CORNERS)  # type: ignore[return-value]

    @property
    def middles(self) -> tuple[int, ...]:
        """Indices of (s/2,0), (0,s/2), (s/2,s/2); empty for S1."""
        if self.level < 2:
            return ()
        h = self.side // 2
        return tuple(self.index_of(c) for c in (Coord(h, 0), Coord(0, h), Coord(h, h)))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges (u, v) with u < v in sorted order."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield u, v

    def to_networkx(self) -> "nx.Graph":
        """An equivalent networkx graph with `coord` node attributes."""
        import networkx as nx

        graph = nx.Graph()
        for i, coord in enumerate(self.vertices):
            graph.add_node(i, coord=coord)
        graph.add_edges_from(self.edges())
        return graph


def _coordinate_edges(n: int) -> set[tuple[Coord, Coord]]:
    edges = {
        (Coord(0, 0), Coord(1, 0)),
        (Coord(0, 0), Coord(0, 1)),
        (Coord(0, 1), Coord(1, 0)),
    }
    for level in range(1, n):
        h = side_length(level)
        grown: set[tuple[Coord, Coord]] = set()
        for da, db in ((0, 0), (h, 0), (0, h)):
            for p, q in edges:
                grown.add((p.shift(da, db), q.shift(da, db)))
        edges = grown
    return edges


def _canonical_key(c: Coord) -> tuple[int, int]:
    return (-c.b, c.a)


def from_edges(level: int, coord_edges: set[tuple[Coord, Coord]] | list[tuple[Coord, Coord]]) -> GasketGraph:
    """Assemble a GasketGraph from coordinate edges, ordering vertices canonically."""
    vertices = sorted({c for edge in coord_edges for c in edge}, key=_canonical_key)
    index = {c: i for i, c in enumerate(vertices)}
    neighbor_sets: list[set[int]] = [set() for _ in vertices]
    for p, q in coord_edges:
        i, j = index[p], index[q]
        neighbor_sets[i].add(j)
        neighbor_sets[j].add(i)
    return GasketGraph(
        level=level,
        side=side_length(level),
        vertices=tuple(vertices),
        adjacency=tuple(tuple(sorted(s)) for s in neighbor_sets),
        _index=index,
    )


def build_uncached(n: int) -> GasketGraph:
    """Build Sn from scratch, bypassing the cache and the level ceiling."""
    graph = from_edges(n, _coordinate_edges(n))
    logger.debug("built S%d: %d vertices, %d edges", n, graph.vertex_count, graph.edge_count)
    return graph


@lru_cache(maxsize=16)
def _build(n: int) -> GasketGraph:
    return build_uncached(n)


def generate(n: int, max_level: int | None = None) -> GasketGraph:
    """Build Sn; edges come only from the recursive union of copies."""
    if max_level is None:
        from gasketgraph.config import load_settings

        max_level = load_settings()["max_level"]
    if n < 1 or n > max_level:
        raise SizeLimitError(f"Level {n} is outside 1..{max_level} (raise GASKET_MAX_LEVEL to allow more)")
    return _build(n)


def subcopy(g: GasketGraph, which: Corner | str) -> tuple[GasketGraph, Coord]:
    """The level n-1 copy containing corner `which`, and its offset inside g."""
    label = parse_corner(which)
    if g.level < 2:
        raise NoSubcopyError("S1 has no sub-copies")
    return _build(g.level - 1), copy_origin(g.side, label)


def embed(g: GasketGraph, sub: GasketGraph, offset: Coord) -> list[int]:
    """Indices in g of the vertices of `sub` translated by `offset`."""
    return [g.index_of(c.shift(offset.a, offset.b)) for c in sub.vertices]


def degree_census(g: GasketGraph) -> dict[int, int]:
    return dict(sorted(Counter(len(nbrs) for nbrs in g.adjacency).items()))


def is_connected(g: GasketGraph) -> bool:
    if not g.vertices:
        return False
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == g.vertex_count


@dataclass(frozen=True)
class Coloring:
    """A vertex coloring with colors in {0, 1, 2}."""

    assignment: tuple[int, ...]

    @property
    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for v, color in enumerate(self.assignment):
            out.setdefault(color, []).append(v)
        return dict(sorted(out.items()))

    @property
    def colors_used(self) -> int:
        return len(set(self.assignment))


def three_coloring(g: GasketGraph) -> Coloring:
    """c(a, b) = (a + 2b) mod 3; every edge direction changes a + 2b by +-1 or +-2."""
    return Coloring(tuple((c.a + 2 * c.b) % 3 for c in g.vertices))


def recursive_coloring(g: GasketGraph) -> Coloring:
    """Color by refinement: S(k+1) is Sk scaled by 2 with one midpoint per edge.

    Scaled vertices keep their color; a midpoint takes the color missing from
    the two endpoints of the edge it subdivides.
    """
    colors: dict[Coord, int] = {Coord(0, 0): 0, Coord(1, 0): 1, Coord(0, 1): 2}
    for level in range(2, g.level + 1):
        refined: dict[Coord, int] = {}
        for c in _build(level).vertices:
            if c.a % 2 == 0 and c.b % 2 == 0:
                refined[c] = colors[Coord(c.a // 2, c.b // 2)]
                continue
            if c.b % 2 == 0:
                da, db = 1, 0
            elif c.a % 2 == 0:
                da, db = 0, 1
            else:
                da, db = 1, -1
            p = Coord((c.a - da) // 2, (c.b - db) // 2)
            q = Coord((c.a + da) // 2, (c.b + db) // 2)
            refined[c] = 3 - colors[p] - colors[q]
        colors = refined
    return Coloring(tuple(colors[c] for c in g.vertices))
