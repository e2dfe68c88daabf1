"""Invariant suites run by `gasketgraph verify`.

Each suite turns a graph into a list of named checks. Checks run on a thread
pool; results are reported in declaration order whatever the scheduling.
"""

from __future__ import annotations

import dataclasses
import logging
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import permutations
from typing import Callable

from gasketgraph import domination, hamilton, oracles, pebbling, simulator
from gasketgraph.config import Settings, load_settings
from gasketgraph.export import export, parse
from gasketgraph.graph import (
    CORNERS,
    GasketGraph,
    build_uncached,
    degree_census,
    edge_count,
    embed,
    generate,
    is_connected,
    recursive_coloring,
    subcopy,
    third_corner,
    three_coloring,
    vertex_count,
)
from gasketgraph.validator import validate_coloring, validate_cycle, validate_path

logger = logging.getLogger(__name__)

SUITE_NAMES = ("core", "cycles", "domination", "pebbling")

# Every admissible path length is exercised up to this level, every cycle length one level higher
ALL_PATH_LENGTHS_MAX_LEVEL = 4
ALL_CYCLE_LENGTHS_MAX_LEVEL = 5
# Exact domination checks stop where gamma_k does by default
DOMINATION_SUITE_MAX_LEVEL = 4
CLOSED_FORM_MAX_LEVEL = 12

CheckFn = Callable[[], tuple[bool, str]]


@dataclasses.dataclass(frozen=True)
class CheckResult:
    """Outcome of one named property check."""

    suite: str
    name: str
    passed: bool
    detail: str = ""


def drop_edge(g: GasketGraph) -> GasketGraph:
    """A copy of g with its first edge removed (test hook for `verify --corrupt`)."""
    u, v = next(g.edges())
    adjacency = [list(nbrs) for nbrs in g.adjacency]
    adjacency[u].remove(v)
    adjacency[v].remove(u)
    return dataclasses.replace(g, adjacency=tuple(tuple(nbrs) for nbrs in adjacency))


# --- core ---


def core_checks(g: GasketGraph, settings: Settings) -> list[tuple[str, CheckFn]]:
    n = g.level

    def counts() -> tuple[bool, str]:
        ok = g.vertex_count == vertex_count(n) and g.edge_count == edge_count(n)
        return ok, f"|V|={g.vertex_count} (expected {vertex_count(n)}), |E|={g.edge_count} (expected {edge_count(n)})"

    def recurrences() -> tuple[bool, str]:
        if n == 1:
            return True, "base level"
        prev = generate(n - 1, max_level=n)
        ok = (
            g.vertex_count == 3 * prev.vertex_count - 3
            and g.vertex_count == prev.vertex_count + 3 ** (n - 1)
            and g.edge_count == 3 * prev.edge_count
        )
        return ok, f"|V|={g.vertex_count} from |V_prev|={prev.vertex_count}, |E|={g.edge_count} from {prev.edge_count}"

    def degrees() -> tuple[bool, str]:
        census = degree_census(g)
        expected = {2: 3} if n == 1 else {2: 3, 4: g.vertex_count - 3}
        corner_degrees = sorted(g.degree(c) for c in g.corners)
        return census == expected and corner_degrees == [2, 2, 2], f"degree census {census}"

    def lattice_steps() -> tuple[bool, str]:
        allowed = {(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)}
        bad = [
            (u, v)
            for u, v in g.edges()
            if (g.vertices[v].a - g.vertices[u].a, g.vertices[v].b - g.vertices[u].b) not in allowed
        ]
        return not bad, f"{len(bad)} edges with a non-unit lattice step"

    def connected() -> tuple[bool, str]:
        ok = is_connected(g)
        return ok, "connected" if ok else "disconnected"

    def coloring() -> tuple[bool, str]:
        ok_formula, errors_formula = validate_coloring(g, three_coloring(g))
        ok_insert, errors_insert = validate_coloring(g, recursive_coloring(g))
        return ok_formula and ok_insert, "; ".join(errors_formula + errors_insert) or "proper, 3 colors"

    def deterministic() -> tuple[bool, str]:
        fresh = build_uncached(n)
        return fresh == g, "rebuilt graph matches" if fresh == g else "rebuilt graph differs"

    def partition() -> tuple[bool, str]:
        if n == 1:
            return True, "no sub-copies"
        seen: list[tuple[int, int]] = []
        for label in CORNERS:
            sub, offset = subcopy(g, label)
            mapping = embed(g, sub, offset)
            seen.extend(tuple(sorted((mapping[u], mapping[v]))) for u, v in sub.edges())
        ok = len(seen) == len(set(seen)) and set(seen) == set(g.edges())
        return ok, f"{len(seen)} copy edges vs {g.edge_count} graph edges"

    def round_trip() -> tuple[bool, str]:
        ok = parse(export(g, "json")) == g
        return ok, "json round trip" if ok else "json round trip differs"

    return [
        ("vertex and edge counts", counts),
        ("count recurrences", recurrences),
        ("degree census", degrees),
        ("edges are unit lattice steps", lattice_steps),
        ("connected", connected),
        ("proper 3-colorings", coloring),
        ("deterministic generation", deterministic),
        ("sub-copies partition the edges", partition),
        ("json round trip", round_trip),
    ]


# --- cycles ---


def cycle_checks(g: GasketGraph, settings: Settings) -> list[tuple[str, CheckFn]]:
    n = g.level
    everything = range(g.vertex_count)
    pairs = list(permutations(CORNERS, 2))

    def ham_paths() -> tuple[bool, str]:
        problems: list[str] = []
        for a, b in pairs:
            path = hamilton.ham_path(g, a, b)
            _, errors = validate_path(g, path.vertices, g.corner(a), g.corner(b), covers=everything)
            problems += [f"{a}->{b}: {e}" for e in errors]
        return not problems, "; ".join(problems[:3]) or f"{len(pairs)} corner pairs"

    def avoiding_paths() -> tuple[bool, str]:
        problems: list[str] = []
        for a, b in pairs:
            skipped = g.corner(third_corner(a, b))
            path = hamilton.ham_path_avoid(g, a, b)
            _, errors = validate_path(
                g, path.vertices, g.corner(a), g.corner(b), covers=[v for v in everything if v != skipped]
            )
            problems += [f"{a}->{b}: {e}" for e in errors]
        return not problems, "; ".join(problems[:3]) or f"{len(pairs)} corner pairs"

    def ham_cycle() -> tuple[bool, str]:
        cycle = hamilton.ham_cycle(g)
        ok, errors = validate_cycle(g, cycle.vertices, length=g.vertex_count, covers=everything)
        return ok, "; ".join(errors) or f"length {cycle.length}"

    def all_path_lengths() -> tuple[bool, str]:
        lo, hi = hamilton.path_bounds(n)
        built = 0
        for a, b in pairs:
            for length in range(lo, hi + 1):
                path = hamilton.path_of_length(g, a, b, length)
                if path.length != length:
                    return False, f"{a}->{b} asked {length}, got {path.length}"
                built += 1
        return True, f"{built} paths, lengths {lo}..{hi}"

    def all_cycle_lengths() -> tuple[bool, str]:
        for length in range(3, g.vertex_count + 1):
            cycle = hamilton.cycle_of_length(g, length)
            if cycle.length != length:
                return False, f"asked {length}, got {cycle.length}"
        return True, f"lengths 3..{g.vertex_count}"

    def oracle_lengths() -> tuple[bool, str]:
        lo, hi = hamilton.path_bounds(n)
        claimed_paths = set(range(lo, hi + 1))
        for a, b in pairs:
            found = oracles.achievable_path_lengths(g, g.corner(a), g.corner(b))
            if not claimed_paths <= found:
                return False, f"{a}->{b}: lengths {sorted(claimed_paths - found)} not found by enumeration"
        claimed_cycles = set(range(3, g.vertex_count + 1))
        found_cycles = oracles.achievable_cycle_lengths(g)
        if not claimed_cycles <= found_cycles:
            return False, f"cycle lengths {sorted(claimed_cycles - found_cycles)} not found by enumeration"
        return True, "exhaustive enumeration agrees"

    checks: list[tuple[str, CheckFn]] = [
        ("hamiltonian corner paths", ham_paths),
        ("corner-avoiding paths", avoiding_paths),
        ("hamiltonian cycle", ham_cycle),
    ]
    if n <= ALL_PATH_LENGTHS_MAX_LEVEL:
        checks.append(("every corner path length", all_path_lengths))
    if n <= ALL_CYCLE_LENGTHS_MAX_LEVEL:
        checks.append(("pancyclic", all_cycle_lengths))
    if n <= oracles.ORACLE_MAX_LEVEL:
        checks.append(("lengths confirmed by enumeration", oracle_lengths))
    return checks


# --- domination ---


def domination_checks(g: GasketGraph, settings: Settings) -> list[tuple[str, CheckFn]]:
    n = g.level

    def closed_form() -> tuple[bool, str]:
        levels = range(1, CLOSED_FORM_MAX_LEVEL + 1)
        bad = [m for m in levels if domination.gamma_closed_form(m) != domination.gamma_recursive(m)]
        return not bad, f"closed form vs recursion differ at {bad}" if bad else f"n <= {CLOSED_FORM_MAX_LEVEL}"

    def efficiency() -> tuple[bool, str]:
        values = [domination.efficiency(m) for m in range(3, CLOSED_FORM_MAX_LEVEL + 1)]
        decreasing = all(x > y for x, y in zip(values, values[1:]))
        close = abs(domination.efficiency(9) - Fraction(9, 10)) < Fraction(1, 1000)
        exact = domination.efficiency(3) == 1 and domination.efficiency(4) == Fraction(14, 15)
        return decreasing and close and exact, f"efficiency(9) = {float(domination.efficiency(9)):.6f}"

    def exact_gamma() -> tuple[bool, str]:
        found = domination.min_dominating_set(g, max_level=DOMINATION_SUITE_MAX_LEVEL)
        expected = domination.gamma_closed_form(n)
        bound = domination.degree_lower_bound(g)
        ok = found.size == expected and found.size >= bound
        return ok, f"search {found.size}, closed form {expected}, degree bound {bound}"

    def helper_profile() -> tuple[bool, str]:
        profile = [domination.gamma_k(g, CORNERS[:k], max_level=DOMINATION_SUITE_MAX_LEVEL) for k in range(4)]
        ok = profile[0] >= profile[1] and profile[2] >= profile[3]
        detail = f"gamma^k = {profile}"
        if n >= 4:
            gamma = domination.gamma_closed_form(n)
            ok = ok and profile[0] == profile[1] == gamma and min(profile[2], profile[3]) >= gamma - 1
            case_bound = domination.helper_case_bound(*profile[:3])
            ok = ok and case_bound >= 3 * gamma
            detail += f", next-level case bound {case_bound}"
        return ok, detail

    checks: list[tuple[str, CheckFn]] = [
        ("closed form matches recursion", closed_form),
        ("efficiency values", efficiency),
    ]
    if n <= DOMINATION_SUITE_MAX_LEVEL:
        checks += [("exact domination number", exact_gamma), ("helper-corner profile", helper_profile)]
    return checks


# --- pebbling ---


def pebbling_checks(g: GasketGraph, settings: Settings) -> list[tuple[str, CheckFn]]:
    n = g.level
    exhaustive = n <= settings["exhaustive_st_max_level"]

    def diameter() -> tuple[bool, str]:
        if exhaustive:
            value = pebbling.diameter(g)
        else:
            value = max(pebbling.distances(g, c).eccentricity for c in g.corners)
        return value == g.side, f"diameter {value}, side {g.side}"

    def lambda_agreement() -> tuple[bool, str]:
        computed = pebbling.cover_pebbling_number(g, exhaustive=exhaustive)
        recursive = pebbling.lambda_recursive(n)
        census = pebbling.lambda_from_census(n)
        ok = computed == recursive == census
        return ok, f"max ST {computed}, recursion {recursive}"

    def census() -> tuple[bool, str]:
        if n < 2:
            return True, "no census identities at level 1"
        reports = [pebbling.beta_census_checks(g, c) for c in CORNERS]
        violations = [v for r in reports for v in r.violations]
        return not violations, "; ".join(violations[:3]) or f"beta = {list(reports[0].beta)}"

    def stacking_sweep() -> tuple[bool, str]:
        lam = pebbling.lambda_recursive(n)
        sim = simulator.PebblingSimulator(g)
        report = simulator.cover_sweep(g, lam, sim)
        corner_stack = simulator.PebbleConfiguration.stack(g.vertex_count, g.corner("L"), lam - 1)
        short_fails = not sim.is_cover_solvable(corner_stack)
        return report.all_solvable and short_fails, (
            f"{report.total - len(report.unsolvable)}/{report.total} weight-{lam} configurations solvable; "
            f"{lam - 1} on a corner {'fails' if short_fails else 'succeeds'}"
        )

    def witnesses_replay() -> tuple[bool, str]:
        lam = pebbling.lambda_recursive(n)
        sim = simulator.PebblingSimulator(g)
        stack = simulator.PebbleConfiguration.stack(g.vertex_count, g.corner("T"), lam)
        moves = sim.cover_moves(stack)
        if moves is None:
            return False, "corner stack of lambda pebbles is not solvable"
        final = simulator.replay(g, stack, moves)
        ok = min(final.counts) >= 1 and final.weight == stack.weight - len(moves)
        far = g.corner("R")
        reach_config = simulator.PebbleConfiguration.stack(g.vertex_count, g.corner("T"), 1 << g.side)
        reach = sim.reach_moves(reach_config, far)
        ok = ok and reach is not None and simulator.replay(g, reach_config, reach).counts[far] >= 1
        return ok, f"{len(moves)} cover moves replayed"

    def pebbling_oracles() -> tuple[bool, str]:
        import networkx as nx

        k3 = simulator.pebbling_number_search(nx.complete_graph(3))
        p3 = simulator.pebbling_number_search(nx.path_graph(3))
        own = simulator.pebbling_number_search(g)
        ok = k3 == pebbling.complete_graph_pebbling_number(3) and p3 == pebbling.path_graph_pebbling_number(3)
        if n == 1:
            ok = ok and own == k3
        return ok, f"pi(K3) = {k3}, pi(P3) = {p3}, pi(S{n}) = {own}"

    checks: list[tuple[str, CheckFn]] = [
        ("diameter equals side", diameter),
        ("cover pebbling number", lambda_agreement),
        ("distance census identities", census),
    ]
    if g.vertex_count <= settings["pebble_max_vertices"]:
        checks += [
            ("stacking theorem sweep", stacking_sweep),
            ("simulator witnesses replay", witnesses_replay),
            ("pebbling number oracles", pebbling_oracles),
        ]
    return checks


SUITES: dict[str, Callable[[GasketGraph, Settings], list[tuple[str, CheckFn]]]] = {
    "core": core_checks,
    "cycles": cycle_checks,
    "domination": domination_checks,
    "pebbling": pebbling_checks,
}


def _run_check(suite: str, name: str, fn: CheckFn) -> CheckResult:
    try:
        passed, detail = fn()
    except Exception as e:  # a crashing check is a failed check
        logger.debug("check %s/%s raised", suite, name, exc_info=True)
        return CheckResult(suite, name, False, f"{type(e).__name__}: {e}")
    return CheckResult(suite, name, passed, detail)


def run_suites(g: GasketGraph, suites: list[str], settings: Settings | None = None) -> list[CheckResult]:
    """Run the requested suites and return results in declaration order."""
    settings = settings or load_settings()
    items = [(suite, name, fn) for suite in suites for name, fn in SUITES[suite](g, settings)]
    with ThreadPoolExecutor(max_workers=settings["verify_workers"]) as pool:
        futures = [pool.submit(_run_check, suite, name, fn) for suite, name, fn in items]
        return [f.result() for f in futures]
