"""Hamiltonian and length-targeted path/cycle certificates for Sn.

All constructions work on coordinates inside a "frame" (level, origin) and
recurse into the three sub-copies. Copies are translated, never rotated, so
the corner of copy X labelled Y is the vertex shared by copies X and Y.

Corner-to-corner paths from X to Y (third corner Z) in S(m+1), s' = 2^(m-1):

  via route     copy X: X->Z, copy Z: X->Y, copy Y: Z->Y avoiding its X corner
                lengths [3s', |V(S(m+1))| - 1]
  direct route  copy X: X->Y, copy Y: X->Y (the side rerouting)
                lengths [2s', 2|V(Sm)| - 2]

A path that must avoid Z swaps the copy-Z leg for its avoiding variant, which
narrows the via route to [3s', |V(S(m+1))| - 2]. Together the routes cover
every length from the side 2s' up to the maximum.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from typing import Literal, Sequence

from gasketgraph.errors import CertificateError, LengthRangeError
from gasketgraph.graph import (
    Coord,
    Corner,
    GasketGraph,
    copy_origin,
    corner_coord,
    parse_corner,
    side_length,
    third_corner,
    vertex_count,
)
from gasketgraph.validator import validate_cycle, validate_path

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Path:
    """A simple path as vertex indices."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def coords(self, g: GasketGraph) -> list[Coord]:
        return [g.vertices[v] for v in self.vertices]


@dataclass(frozen=True)
class Cycle:
    """A simple cycle as vertex indices; the closing edge is implicit."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    def coords(self, g: GasketGraph) -> list[Coord]:
        return [g.vertices[v] for v in self.vertices]


def certificate_json(cert: Path | Cycle, g: GasketGraph | None = None) -> str:
    """Serialize a certificate as {kind, length, vertices[, coords]}."""
    kind: Literal["path", "cycle"] = "path" if isinstance(cert, Path) else "cycle"
    payload: dict = {"kind": kind, "length": cert.length, "vertices": list(cert.vertices)}
    if g is not None:
        payload["coords"] = [list(c) for c in cert.coords(g)]
    return json.dumps(payload, indent=2)


def path_bounds(level: int, avoid: bool = False) -> tuple[int, int]:
    """Admissible corner-to-corner path lengths in S(level)."""
    top = vertex_count(level) - (2 if avoid else 1)
    return side_length(level), top


def _fill(total: int, bounds: Sequence[tuple[int, int]], order: Sequence[int]) -> list[int]:
    """Split `total` into leg lengths within bounds, topping legs up in `order`."""
    lengths = [lo for lo, _ in bounds]
    surplus = total - sum(lengths)
    for i in order:
        extra = min(surplus, bounds[i][1] - bounds[i][0])
        lengths[i] += extra
        surplus -= extra
    if surplus:
        raise LengthRangeError(f"Length {total} cannot be split over legs {list(bounds)}")
    return lengths


def _join(legs: list[list[Coord]]) -> list[Coord]:
    out = list(legs[0])
    for leg in legs[1:]:
        out.extend(leg[1:])
    return out


def _corner_path(
    level: int, origin: Coord, start: Corner, end: Corner, avoid: bool, length: int
) -> list[Coord]:
    side = side_length(level)
    third = third_corner(start, end)
    if level == 1:
        a, b, z = (corner_coord(1, c, origin) for c in (start, end, third))
        return [a, b] if length == 1 else [a, z, b]

    sub = level - 1
    s_sub = side_length(sub)
    here = {c: copy_origin(side, c, origin) for c in (start, end, third)}

    if length >= 3 * s_sub:
        specs = [
            (here[start], start, third, False),
            (here[third], start, end, avoid),
            (here[end], third, end, True),
        ]
        # Reduction r = max - length is taken from the first leg, then the
        # second, then the third, i.e. legs are topped up last-to-first.
        order = (2, 1, 0)
    else:
        # Side rerouting: first leg runs from start to the copy shared with end
        specs = [
            (here[start], start, end, False),
            (here[end], start, end, False),
        ]
        order = (1, 0)

    bounds = [path_bounds(sub, leg_avoid) for *_, leg_avoid in specs]
    lengths = _fill(length, bounds, order)
    return _join(
        [
            _corner_path(sub, leg_origin, leg_start, leg_end, leg_avoid, leg_len)
            for (leg_origin, leg_start, leg_end, leg_avoid), leg_len in zip(specs, lengths)
        ]
    )


def _corner_cycle(level: int, origin: Coord, length: int) -> list[Coord]:
    side = side_length(level)
    if level == 1:
        return [corner_coord(1, c, origin) for c in ("L", "R", "T")]

    sub = level - 1
    s_sub = side_length(sub)
    if length < 3 * s_sub:
        # |V(S(level-1))| >= 3 s', so smaller cycles fit inside one copy
        return _corner_cycle(sub, copy_origin(side, "L", origin), length)

    specs: list[tuple[Corner, Corner, Corner]] = [("T", "L", "R"), ("R", "T", "L"), ("L", "R", "T")]
    bounds = [path_bounds(sub)] * 3
    lengths = _fill(length, bounds, (0, 1, 2))
    closed = _join(
        [
            _corner_path(sub, copy_origin(side, copy, origin), leg_start, leg_end, False, leg_len)
            for (copy, leg_start, leg_end), leg_len in zip(specs, lengths)
        ]
    )
    return closed[:-1]


def _check_ends(start: str, end: str) -> tuple[Corner, Corner]:
    a, b = parse_corner(start), parse_corner(end)
    third_corner(a, b)
    return a, b


def path_of_length(g: GasketGraph, start: str, end: str, length: int, avoid: bool = False) -> Path:
    """A simple path of exactly `length` edges between two corners of g.

    With `avoid`, the path never visits the third corner.
    """
    a, b = _check_ends(start, end)
    lo, hi = path_bounds(g.level, avoid)
    if not lo <= length <= hi:
        raise LengthRangeError(f"Path length {length} outside [{lo}, {hi}] for S{g.level}")

    coords = _corner_path(g.level, Coord(0, 0), a, b, avoid, length)
    vertices = tuple(g.index_of(c) for c in coords)
    is_valid, errors = validate_path(g, vertices, start=g.corner(a), end=g.corner(b), length=length)
    if avoid and g.corner(third_corner(a, b)) in vertices:
        is_valid, errors = False, [*errors, "Path visits the avoided corner"]
    if not is_valid:
        raise CertificateError(f"Path {a}->{b} of length {length} in S{g.level} is invalid: {errors}")
    logger.debug("path %s->%s length %d in S%d", a, b, length, g.level)
    return Path(vertices)


def ham_path(g: GasketGraph, start: str, end: str) -> Path:
    """A Hamiltonian path between two corners."""
    return path_of_length(g, start, end, g.vertex_count - 1)


def ham_path_avoid(g: GasketGraph, start: str, end: str) -> Path:
    """A path between two corners through every vertex except the third corner."""
    return path_of_length(g, start, end, g.vertex_count - 2, avoid=True)


def cycle_of_length(g: GasketGraph, length: int) -> Cycle:
    """A simple cycle with exactly `length` edges, 3 <= length <= |V|."""
    if not 3 <= length <= g.vertex_count:
        raise LengthRangeError(f"Cycle length {length} outside [3, {g.vertex_count}] for S{g.level}")

    vertices = tuple(g.index_of(c) for c in _corner_cycle(g.level, Coord(0, 0), length))
    is_valid, errors = validate_cycle(g, vertices, length=length)
    if not is_valid:
        raise CertificateError(f"Cycle of length {length} in S{g.level} is invalid: {errors}")
    return Cycle(vertices)


def ham_cycle(g: GasketGraph) -> Cycle:
    """A Hamiltonian cycle glued from three corner-to-corner Hamiltonian paths."""
    return cycle_of_length(g, g.vertex_count)
