"""Minimum dominating sets of Sn and the helper-corner variants.

gamma_n is the domination number of Sn. gamma_n^k is the least number of
vertices (anywhere in Sn) that dominate Sn' = Sn minus its corners when k
corners assist for free, i.e. their closed neighborhoods count as covered.

Above level 3 the search splits Sn into its three copies of S(n-1). The copies
meet only at the three middle vertices, so once each middle is either a member
or assigned to one copy that must dominate it, the copies are independent. Each
copy is solved the same way down to S3 regions, which the branch-and-bound
searches directly. Region optima are cached by level and corner statuses.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Literal, Sequence

from gasketgraph.config import load_settings
from gasketgraph.errors import CertificateError, DomainError, SizeLimitError
from gasketgraph.graph import (
    CORNERS,
    Coord,
    Corner,
    GasketGraph,
    copy_origin,
    corner_coord,
    generate,
    parse_corner,
    side_length,
    vertex_count,
)
from gasketgraph.validator import validate_domination

logger = logging.getLogger(__name__)

Target = Literal["all", "interior"]

# in: a member counted by the caller; required: dominated from inside the region;
# free: dominated from outside the region
CornerStatus = Literal["in", "required", "free"]
Statuses = tuple[CornerStatus, CornerStatus, CornerStatus]

# Max degree 4, so a closed neighborhood holds at most 5 vertices
MAX_CLOSED_NEIGHBORHOOD = 5

# Regions up to this level go straight to branch-and-bound
BASE_LEVEL = 3

# Middle vertices by the two copies they join, and each copy's corners in T, L, R order
_MIDDLES = ("LR", "LT", "RT")
_COPY_CORNERS: dict[Corner, tuple[str, str, str]] = {
    "T": ("T", "LT", "RT"),
    "L": ("LT", "L", "LR"),
    "R": ("RT", "LR", "R"),
}
# "in", or the copy that must dominate the middle
_MIDDLE_OPTIONS = {"LR": ("in", "L", "R"), "LT": ("in", "L", "T"), "RT": ("in", "R", "T")}


@dataclass(frozen=True)
class DominatingSet:
    """A domination certificate."""

    members: tuple[int, ...]
    helpers: tuple[int, ...] = ()
    target: Target = "all"

    @property
    def size(self) -> int:
        return len(self.members)


def target_vertices(g: GasketGraph, target: Target) -> list[int]:
    if target == "all":
        return list(range(g.vertex_count))
    corners = set(g.corners)
    return [v for v in range(g.vertex_count) if v not in corners]


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class BranchAndBound:
    """Exact minimum domination of a target vertex set.

    Branches on the lowest-index undominated target vertex over its closed
    neighborhood in index order. A node is pruned when the chosen count plus a
    lower bound on what remains cannot beat the incumbent. The lower bound is
    the larger of ceil(|undominated| / 5) and a greedy packing of undominated
    vertices with pairwise disjoint closed neighborhoods.

    `allowed` restricts which vertices may be chosen; `solve` returns None when
    some target vertex cannot be dominated at all.
    """

    def __init__(
        self,
        g: GasketGraph,
        target: Iterable[int],
        pre_dominated: Iterable[int] = (),
        allowed: Iterable[int] | None = None,
    ) -> None:
        self.g = g
        self.allowed = sorted(set(range(g.vertex_count) if allowed is None else allowed))
        allowed_set = set(self.allowed)
        self.closed = [(1 << v) | sum(1 << u for u in nbrs) for v, nbrs in enumerate(g.adjacency)]
        self.candidates = [
            tuple(w for w in sorted((v, *nbrs)) if w in allowed_set) for v, nbrs in enumerate(g.adjacency)
        ]
        self.target = sum(1 << v for v in set(target))
        self.start = 0
        for v in set(pre_dominated):
            self.start |= self.closed[v]
        self.nodes = 0
        self.best: list[int] = []

    def _lower_bound(self, remaining: int) -> int:
        packing = 0
        blocked = 0
        for v in _bits(remaining):
            if not self.closed[v] & blocked:
                packing += 1
                blocked |= self.closed[v]
        return max(packing, -(-remaining.bit_count() // MAX_CLOSED_NEIGHBORHOOD))

    def _greedy(self) -> list[int]:
        chosen: list[int] = []
        remaining = self.target & ~self.start
        while remaining:
            best_v = max(self.allowed, key=lambda v: ((self.closed[v] & remaining).bit_count(), -v))
            chosen.append(best_v)
            remaining &= ~self.closed[best_v]
        return chosen

    def _search(self, dominated: int, chosen: list[int]) -> None:
        self.nodes += 1
        remaining = self.target & ~dominated
        if not remaining:
            if len(chosen) < len(self.best):
                self.best = list(chosen)
                logger.debug("incumbent %d after %d nodes", len(chosen), self.nodes)
            return
        if len(chosen) + self._lower_bound(remaining) >= len(self.best):
            return
        u = (remaining & -remaining).bit_length() - 1
        for w in self.candidates[u]:
            chosen.append(w)
            self._search(dominated | self.closed[w], chosen)
            chosen.pop()

    def solve(self) -> list[int] | None:
        if any(not self.candidates[v] for v in _bits(self.target & ~self.start)):
            return None
        self.best = self._greedy()
        self._search(self.start, [])
        logger.debug("search finished: size %d, %d nodes", len(self.best), self.nodes)
        return sorted(self.best)


@dataclass(frozen=True)
class _RegionPlan:
    size: int
    members: tuple[Coord, ...] = ()
    decisions: tuple[str, ...] = ()


def _copy_statuses(copy: Corner, outer: dict[str, CornerStatus], decided: dict[str, str]) -> Statuses:
    statuses: list[CornerStatus] = []
    for position in _COPY_CORNERS[copy]:
        if position in outer:
            statuses.append(outer[position])
        elif decided[position] == "in":
            statuses.append("in")
        else:
            statuses.append("required" if decided[position] == copy else "free")
    return tuple(statuses)  # type: ignore[return-value]


@lru_cache(maxsize=None)
def _region_plan(level: int, statuses: Statuses) -> _RegionPlan | None:
    """Fewest members strictly inside an S(level) region with the given corner statuses (T, L, R)."""
    if level <= BASE_LEVEL:
        g = generate(level, max_level=level)
        status_of = dict(zip(g.corners, statuses))
        target = [v for v in range(g.vertex_count) if status_of.get(v, "required") == "required"]
        pre = [v for v, status in status_of.items() if status == "in"]
        allowed = [v for v in range(g.vertex_count) if v not in status_of]
        found = BranchAndBound(g, target, pre, allowed).solve()
        if found is None:
            return None
        return _RegionPlan(size=len(found), members=tuple(g.vertices[v] for v in found))

    outer = dict(zip(CORNERS, statuses))
    best: _RegionPlan | None = None
    for decisions in product(*(_MIDDLE_OPTIONS[m] for m in _MIDDLES)):
        decided = dict(zip(_MIDDLES, decisions))
        size = decisions.count("in")
        for copy in CORNERS:
            sub = _region_plan(level - 1, _copy_statuses(copy, outer, decided))
            if sub is None:
                break
            size += sub.size
        else:
            if best is None or size < best.size:
                best = _RegionPlan(size=size, decisions=decisions)
    logger.debug("S%d region %s: %s", level, statuses, "infeasible" if best is None else best.size)
    return best


def _region_members(level: int, statuses: Statuses, origin: Coord) -> list[Coord]:
    plan = _region_plan(level, statuses)
    assert plan is not None
    if level <= BASE_LEVEL:
        return [c.shift(origin.a, origin.b) for c in plan.members]

    side = side_length(level)
    half = side // 2
    middle_at = {"LR": Coord(half, 0), "LT": Coord(0, half), "RT": Coord(half, half)}
    outer = dict(zip(CORNERS, statuses))
    decided = dict(zip(_MIDDLES, plan.decisions))
    coords = [middle_at[m].shift(origin.a, origin.b) for m in _MIDDLES if decided[m] == "in"]
    for copy in CORNERS:
        coords += _region_members(level - 1, _copy_statuses(copy, outer, decided), copy_origin(side, copy, origin))
    return coords


def _is_generated(g: GasketGraph) -> bool:
    reference = generate(g.level, max_level=g.level)
    return g.vertices == reference.vertices and g.adjacency == reference.adjacency


def _corner_search(g: GasketGraph, choices: Sequence[Sequence[CornerStatus]], helpers: set[Corner]) -> tuple[int, ...]:
    """Least member set over every assignment of the allowed statuses to the corners (T, L, R)."""
    best: tuple[int, Statuses] | None = None
    for statuses in product(*choices):
        plan = _region_plan(g.level, statuses)
        if plan is None:
            continue
        cost = plan.size + sum(s == "in" and c not in helpers for c, s in zip(CORNERS, statuses))
        if best is None or cost < best[0]:
            best = (cost, statuses)  # type: ignore[assignment]
    if best is None:
        raise CertificateError(f"No corner assignment dominates S{g.level}")

    statuses = best[1]
    coords = _region_members(g.level, statuses, Coord(0, 0))
    coords += [corner_coord(g.side, c) for c, s in zip(CORNERS, statuses) if s == "in" and c not in helpers]
    return tuple(sorted(g.index_of(c) for c in coords))


def min_dominating_set(g: GasketGraph, max_level: int | None = None) -> DominatingSet:
    """A minimum dominating set of all of V by exact search."""
    if max_level is None:
        max_level = load_settings()["domination_max_level"]
    if g.level > max_level:
        raise SizeLimitError(f"Exact domination search is limited to level {max_level}; use gamma_closed_form")

    if _is_generated(g):
        members = _corner_search(g, [("in", "required")] * 3, set())
    else:
        found = BranchAndBound(g, range(g.vertex_count)).solve()
        members = tuple(found or ())
    is_valid, errors = validate_domination(g, members, range(g.vertex_count))
    if not is_valid:
        raise CertificateError(f"Dominating set for S{g.level} is invalid: {errors}")
    return DominatingSet(members=members)


def interior_dominating_set(g: GasketGraph, helpers: Iterable[int]) -> DominatingSet:
    """A minimum set dominating Sn' with the given helper corners assisting."""
    helper_set = tuple(sorted(set(helpers)))
    corners = set(g.corners)
    if not set(helper_set) <= corners:
        raise DomainError(f"Helpers must be corners of S{g.level}, got {helper_set}")
    target = target_vertices(g, "interior")
    if _is_generated(g):
        helper_labels = {c for c in CORNERS if g.corner(c) in helper_set}
        choices = [("in",) if c in helper_labels else ("in", "free") for c in CORNERS]
        members = _corner_search(g, choices, helper_labels)
    else:
        found = BranchAndBound(g, target, helper_set).solve()
        members = tuple(found or ())
    is_valid, errors = validate_domination(g, members, target, helper_set)
    if not is_valid:
        raise CertificateError(f"Interior dominating set for S{g.level} is invalid: {errors}")
    return DominatingSet(members=members, helpers=helper_set, target="interior")


def gamma_k(g: GasketGraph, helpers: Iterable[str], max_level: int | None = None) -> int:
    """gamma_n^k for k = |helpers|, checked equal over every helper set of that size."""
    if max_level is None:
        max_level = load_settings()["gamma_k_max_level"]
    if g.level > max_level:
        raise SizeLimitError(f"gamma_k search is limited to level {max_level}")

    k = len({parse_corner(h) for h in helpers})
    values = {
        subset: interior_dominating_set(g, [g.corner(c) for c in subset]).size
        for subset in combinations(CORNERS, k)
    }
    if len(set(values.values())) != 1:
        raise CertificateError(f"gamma_k depends on which corners help: {values}")
    return next(iter(values.values()))


def gamma_closed_form(n: int) -> int:
    """gamma_1 = 1, gamma_2 = 2 and gamma_n = 3^(n-2) for n >= 3."""
    if n < 1:
        raise DomainError(f"Level must be >= 1, got {n}")
    if n <= 2:
        return n
    return 3 ** (n - 2)


def gamma_recursive(n: int) -> int:
    """gamma_n = 3 gamma_(n-1) iterated up from gamma_3 = 3."""
    if n <= 3:
        return gamma_closed_form(n)
    gamma = 3
    for _ in range(4, n + 1):
        gamma *= 3
    return gamma


def efficiency(n: int) -> Fraction:
    """|Vn| / (5 gamma_n): vertices per unit of covering capacity."""
    if n < 3:
        raise DomainError(f"Efficiency uses gamma_n = 3^(n-2), which needs n >= 3, got {n}")
    return Fraction(vertex_count(n), MAX_CLOSED_NEIGHBORHOOD * gamma_closed_form(n))


def degree_lower_bound(g: GasketGraph) -> int:
    """ceil(|V| / (max degree + 1))."""
    max_degree = max(len(nbrs) for nbrs in g.adjacency)
    return math.ceil(g.vertex_count / (max_degree + 1))


def helper_case_bound(gamma0: int, gamma1: int, gamma2: int) -> int:
    """Lower bound on gamma_(n+1) split by how many middle vertices (0..3) a dominating set holds."""
    return min(
        3 * gamma0,
        2 * gamma1 + gamma0 + 1,
        2 * gamma1 + gamma2 + 2,
        3 * gamma2 + 3,
    )
