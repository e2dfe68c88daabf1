from itertools import permutations

import pytest

from gasketgraph import hamilton, oracles
from gasketgraph.graph import CORNERS, generate, third_corner


class TestPathLengths:
    def test_s2_top_to_left(self):
        g = generate(2)
        assert oracles.achievable_path_lengths(g, g.corner("T"), g.corner("L")) == {2, 3, 4, 5}

    @pytest.mark.parametrize("n", [2, 3])
    @pytest.mark.parametrize("start, end", list(permutations(CORNERS, 2)))
    def test_constructor_lengths_are_achievable(self, n, start, end):
        g = generate(n)
        lo, hi = hamilton.path_bounds(n)
        found = oracles.achievable_path_lengths(g, g.corner(start), g.corner(end))
        assert set(range(lo, hi + 1)) <= found
        assert min(found) == lo
        assert max(found) == hi

    @pytest.mark.parametrize("n", [2, 3])
    def test_avoiding_lengths(self, n):
        g = generate(n)
        skipped = g.corner(third_corner("T", "L"))
        lo, hi = hamilton.path_bounds(n, avoid=True)
        found = oracles.achievable_path_lengths(g, g.corner("T"), g.corner("L"), avoid=skipped)
        assert set(range(lo, hi + 1)) <= found
        assert max(found) == hi


class TestCycleLengths:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_pancyclic(self, n):
        g = generate(n)
        assert oracles.achievable_cycle_lengths(g) == set(range(3, g.vertex_count + 1))


class TestHamiltonianCounts:
    def test_s2_has_one_hamiltonian_cycle(self):
        assert oracles.count_hamiltonian_cycles(generate(2)) == 1

    def test_s2_corner_paths_exist(self):
        g = generate(2)
        assert oracles.count_hamiltonian_paths(g, g.corner("T"), g.corner("R")) >= 1
