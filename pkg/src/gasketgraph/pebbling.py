"""Distances, diameter, stacking values and cover pebbling numbers.

ST(v) = sum over u of 2^d(u, v). By the Stacking Theorem the cover pebbling
number of a connected graph is max_v ST(v); on Sn the maximum sits at the
corners. All values are exact Python integers: lambda(Sn) grows like
2^(2^(n-1)) and leaves 64-bit range at n = 7.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from gasketgraph.config import load_settings
from gasketgraph.errors import CertificateError, DomainError
from gasketgraph.graph import GasketGraph, parse_corner

logger = logging.getLogger(__name__)

Adjacency = Sequence[Sequence[int]]


def bfs_distances(adjacency: Adjacency, source: int) -> list[int]:
    """Hop distances from source; -1 marks unreachable vertices."""
    dist = [-1] * len(adjacency)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in adjacency[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def stacking_value(dist: Sequence[int]) -> int:
    return sum(1 << d for d in dist)


@dataclass(frozen=True)
class DistanceProfile:
    """BFS census from one source."""

    source: int
    dist: tuple[int, ...]
    beta: tuple[int, ...] = field(default=())
    st_value: int = 0

    @property
    def eccentricity(self) -> int:
        return len(self.beta) - 1


def distances(g: GasketGraph | Adjacency, source: int) -> DistanceProfile:
    """Distances, the census beta(i) and ST(source)."""
    adjacency = g.adjacency if isinstance(g, GasketGraph) else g
    dist = bfs_distances(adjacency, source)
    if min(dist) < 0:
        raise DomainError("Graph is disconnected; distances are undefined")
    beta = [0] * (max(dist) + 1)
    for d in dist:
        beta[d] += 1
    return DistanceProfile(source=source, dist=tuple(dist), beta=tuple(beta), st_value=stacking_value(dist))


def diameter(g: GasketGraph | Adjacency) -> int:
    """Exact diameter: corners first, then a BFS from every vertex."""
    adjacency = g.adjacency if isinstance(g, GasketGraph) else g
    sources = list(g.corners) if isinstance(g, GasketGraph) else []
    sources += [v for v in range(len(adjacency)) if v not in sources]
    best = 0
    for v in sources:
        best = max(best, distances(adjacency, v).eccentricity)
    return best


def st_values(g: GasketGraph | Adjacency) -> list[int]:
    """ST(v) for every vertex."""
    adjacency = g.adjacency if isinstance(g, GasketGraph) else g
    return [distances(adjacency, v).st_value for v in range(len(adjacency))]


def stacking_number(adjacency: Adjacency) -> int:
    """max_v ST(v) for an arbitrary connected graph."""
    return max(st_values(adjacency))


def cover_pebbling_number(g: GasketGraph, exhaustive: bool | None = None) -> int:
    """lambda(Sn) as max ST(v), checking that the corners attain the maximum.

    Above the configured exhaustive level only the corners are evaluated, which
    is exact because a corner maximizes ST.
    """
    if exhaustive is None:
        exhaustive = g.level <= load_settings()["exhaustive_st_max_level"]

    corner_st = [distances(g, c).st_value for c in g.corners]
    if len(set(corner_st)) != 1:
        raise CertificateError(f"Corners of S{g.level} disagree on ST: {corner_st}")
    if not exhaustive:
        logger.info("S%d: evaluating ST at the corners only", g.level)
        return corner_st[0]

    values = st_values(g)
    best = max(values)
    maximizers = {v for v, value in enumerate(values) if value == best}
    if not set(g.corners) <= maximizers:
        raise CertificateError(f"A non-corner vertex of S{g.level} beats the corners on ST")
    return best


def lambda_recursive(n: int) -> int:
    """lambda(S1) = 5, lambda(S(m+1)) = (1 + 2^(2^(m-1)+1)) lambda(Sm) - (2^(2^m) + 2^(2^(m-1)+1))."""
    if n < 1:
        raise DomainError(f"Level must be >= 1, got {n}")
    value = 5
    for m in range(1, n):
        # exponents use the level m being extended
        grow = 1 << ((1 << (m - 1)) + 1)
        value = (1 + grow) * value - ((1 << (1 << m)) + grow)
    return value


def lambda_from_census(n: int) -> int:
    """The same recursion in census form: lambda + 2 * 2^(2^(m-1)) (lambda - 1) - 2^(2^m)."""
    if n < 1:
        raise DomainError(f"Level must be >= 1, got {n}")
    value = 5
    for m in range(1, n):
        value = value + 2 * (1 << (1 << (m - 1))) * (value - 1) - (1 << (1 << m))
    return value


@dataclass(frozen=True)
class PebblingNumbers:
    """lambda always; pi only when an exhaustive search was run."""

    lam: int
    pi: int | None = None


@dataclass
class CensusReport:
    """Outcome of the distance-census identities from a corner."""

    beta: tuple[int, ...]
    checked: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


def beta_census_checks(g: GasketGraph, corner: str = "T") -> CensusReport:
    """Check beta(j + h) = 2 beta(j) for 1 <= j <= h-1 and beta(2h) = 2 beta(h) - 1, h = s/2."""
    if g.level < 2:
        raise DomainError("Census identities need level >= 2")
    beta = distances(g, g.corner(parse_corner(corner))).beta
    report = CensusReport(beta=beta)
    half = g.side // 2

    if len(beta) != g.side + 1:
        report.violations.append(f"eccentricity {len(beta) - 1} != side {g.side}")
        return report

    for j in range(1, half):
        report.checked += 1
        if beta[j + half] != 2 * beta[j]:
            report.violations.append(f"beta({j + half}) = {beta[j + half]} != 2*beta({j}) = {2 * beta[j]}")
    report.checked += 1
    if beta[2 * half] != 2 * beta[half] - 1:
        report.violations.append(f"beta({2 * half}) = {beta[2 * half]} != 2*beta({half}) - 1 = {2 * beta[half] - 1}")
    return report


# Closed forms for small families, used as oracles for the simulator


def complete_graph_cover_number(n: int) -> int:
    return 2 * n - 1


def path_graph_cover_number(n: int) -> int:
    return (1 << n) - 1


def hypercube_cover_number(d: int) -> int:
    return 3**d


def complete_graph_pebbling_number(n: int) -> int:
    return n


def path_graph_pebbling_number(n: int) -> int:
    return 1 << (n - 1)
