import json
from math import comb

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gasketgraph import simulator
from gasketgraph.errors import IllegalMoveError, ParseError, SearchBudgetError
from gasketgraph.graph import generate
from gasketgraph.simulator import PebbleConfiguration, PebblingSimulator


def counts_strategy(vertex_count, max_weight):
    """Count vectors built from up to max_weight pebble placements."""
    placements = st.lists(st.integers(min_value=0, max_value=vertex_count - 1), max_size=max_weight)
    return placements.map(lambda spots: [spots.count(v) for v in range(vertex_count)])


class TestMoves:
    def test_apply(self):
        g = generate(1)
        start = PebbleConfiguration.stack(3, g.corner("L"), 3)
        after = simulator.apply_move(g, start, g.corner("L"), g.corner("R"))
        assert after.counts[g.corner("L")] == 1
        assert after.counts[g.corner("R")] == 1
        assert after.weight == 2

    def test_needs_two_pebbles(self):
        g = generate(1)
        with pytest.raises(IllegalMoveError):
            simulator.apply_move(g, PebbleConfiguration((1, 1, 1)), 0, 1)

    def test_needs_an_edge(self):
        g = generate(2)
        start = PebbleConfiguration.stack(6, g.corner("T"), 2)
        with pytest.raises(IllegalMoveError):
            simulator.apply_move(g, start, g.corner("T"), g.corner("L"))

    def test_replay_stops_at_first_bad_move(self):
        g = generate(1)
        start = PebbleConfiguration.stack(3, 0, 2)
        with pytest.raises(IllegalMoveError):
            simulator.replay(g, start, [(0, 1), (0, 2)])


class TestConfigurations:
    @pytest.mark.parametrize("vertices, weight", [(3, 5), (6, 4), (6, 17)])
    def test_stars_and_bars(self, vertices, weight):
        configs = list(simulator.configurations(vertices, weight))
        assert len(configs) == comb(weight + vertices - 1, vertices - 1)
        assert len(set(configs)) == len(configs)
        assert all(c.weight == weight for c in configs)

    def test_mapping_round_trip(self):
        config = PebbleConfiguration.from_mapping(4, {0: 2, 3: 1})
        assert config.counts == (2, 0, 0, 1)
        assert config.to_mapping() == {0: 2, 3: 1}

    @pytest.mark.parametrize("mapping", [{7: 1}, {0: -1}])
    def test_mapping_rejects(self, mapping):
        with pytest.raises(ParseError):
            PebbleConfiguration.from_mapping(4, mapping)


class TestReachability:
    def test_two_pebbles_cross_an_edge(self):
        g = generate(1)
        assert simulator.is_reachable(g, PebbleConfiguration.stack(3, g.corner("L"), 2), g.corner("R"))
        assert not simulator.is_reachable(g, PebbleConfiguration.stack(3, g.corner("L"), 1), g.corner("R"))

    def test_distance_two_needs_four(self):
        g = generate(2)
        sim = PebblingSimulator(g)
        far = g.corner("R")
        assert sim.is_reachable(PebbleConfiguration.stack(6, g.corner("T"), 4), far)
        assert not sim.is_reachable(PebbleConfiguration.stack(6, g.corner("T"), 3), far)

    def test_witness_replays(self):
        g = generate(2)
        sim = PebblingSimulator(g)
        start = PebbleConfiguration.stack(6, g.corner("T"), 4)
        moves = sim.reach_moves(start, g.corner("R"))
        assert moves is not None and len(moves) == 3
        assert simulator.replay(g, start, moves).counts[g.corner("R")] == 1

    def test_unreachable_has_no_witness(self):
        g = generate(2)
        assert PebblingSimulator(g).reach_moves(PebbleConfiguration.stack(6, 0, 1), g.corner("R")) is None

    def test_split_pebbles_on_a_triangle_cannot_move(self):
        assert not simulator.is_reachable(nx.complete_graph(3), PebbleConfiguration((0, 1, 1)), 0)

    def test_larger_graphs_use_the_weight_budget(self):
        g = generate(3)
        start = PebbleConfiguration.stack(g.vertex_count, g.corner("T"), 16)
        assert simulator.is_reachable(g, start, g.corner("R"))

    @given(counts=counts_strategy(6, 10), target=st.integers(min_value=0, max_value=5))
    def test_reach_witnesses_are_sound(self, counts, target):
        g = generate(2)
        sim = PebblingSimulator(g)
        start = PebbleConfiguration(tuple(counts))
        moves = sim.reach_moves(start, target)
        assert (moves is not None) == sim.is_reachable(start, target)
        if moves is not None:
            assert simulator.replay(g, start, moves).counts[target] >= 1


class TestCover:
    def test_s1_stacking_threshold(self):
        g = generate(1)
        corner = g.corner("T")
        assert not simulator.is_cover_solvable(g, PebbleConfiguration.stack(3, corner, 4))
        assert simulator.is_cover_solvable(g, PebbleConfiguration.stack(3, corner, 5))

    def test_s2_stacking_threshold(self):
        g = generate(2)
        sim = PebblingSimulator(g)
        corner = g.corner("L")
        assert not sim.is_cover_solvable(PebbleConfiguration.stack(6, corner, 16))
        assert sim.is_cover_solvable(PebbleConfiguration.stack(6, corner, 17))

    def test_already_covered(self):
        g = generate(1)
        sim = PebblingSimulator(g)
        assert sim.cover_moves(PebbleConfiguration((1, 1, 1))) == []

    @given(counts=counts_strategy(3, 8))
    def test_cover_witnesses_are_sound(self, counts):
        g = generate(1)
        sim = PebblingSimulator(g)
        start = PebbleConfiguration(tuple(counts))
        moves = sim.cover_moves(start)
        assert (moves is not None) == sim.is_cover_solvable(start)
        if moves is not None:
            final = simulator.replay(g, start, moves)
            assert min(final.counts) >= 1
            assert final.weight == start.weight - len(moves)

    @given(counts=counts_strategy(6, 14), extra=st.integers(min_value=0, max_value=5))
    def test_adding_a_pebble_keeps_cover_solvable(self, counts, extra):
        sim = PebblingSimulator(generate(2))
        if sim.is_cover_solvable(PebbleConfiguration(tuple(counts))):
            counts[extra] += 1
            assert sim.is_cover_solvable(PebbleConfiguration(tuple(counts)))

    def test_s1_sweep(self):
        report = simulator.cover_sweep(generate(1), 5)
        assert report.total == 21
        assert report.all_solvable

    def test_s1_sweep_below_threshold(self):
        report = simulator.cover_sweep(generate(1), 4)
        assert not report.all_solvable
        assert PebbleConfiguration((4, 0, 0)) in report.unsolvable

    @pytest.mark.slow
    def test_s2_sweep(self):
        report = simulator.cover_sweep(generate(2), 17)
        assert report.total == 26334
        assert report.all_solvable


class TestPebblingNumber:
    def test_complete_graph(self):
        assert simulator.pebbling_number_search(nx.complete_graph(3)) == 3

    def test_path(self):
        assert simulator.pebbling_number_search(nx.path_graph(3)) == 4

    def test_s1(self):
        assert simulator.pebbling_number_search(generate(1)) == 3

    def test_s2_is_between_bounds(self):
        g = generate(2)
        pi = simulator.pebbling_number_search(g)
        # at least |V| and at least 2^diam, at most the cover pebbling number
        assert max(g.vertex_count, 1 << g.side) <= pi <= 17
        assert pi == 7


class TestBudgets:
    def test_vertex_budget(self):
        with pytest.raises(SearchBudgetError):
            PebblingSimulator(generate(3))

    def test_weight_budget(self):
        g = generate(1)
        sim = PebblingSimulator(g, max_weight=4)
        with pytest.raises(SearchBudgetError):
            sim.is_cover_solvable(PebbleConfiguration.stack(3, 0, 5))

    def test_budget_from_environment(self, monkeypatch):
        monkeypatch.setenv("GASKET_PEBBLE_MAX_VERTICES", "15")
        assert PebblingSimulator(generate(3)).max_vertices == 15

    def test_wrong_length(self):
        with pytest.raises(ParseError):
            PebblingSimulator(generate(1)).is_cover_solvable(PebbleConfiguration((1, 1)))


class TestParseConfiguration:
    def test_stack_by_corner(self):
        g = generate(2)
        config = simulator.parse_configuration("stack:L:17", g)
        assert config.counts[g.corner("L")] == 17
        assert config.weight == 17

    def test_stack_by_index(self):
        config = simulator.parse_configuration("stack:4:3", generate(2))
        assert config.counts == (0, 0, 0, 0, 3, 0)

    @pytest.mark.parametrize("source", ["stack:L", "stack:X:3", "stack:L:many", "stack:9:1", "stack:L:-2"])
    def test_bad_shorthand(self, source):
        with pytest.raises(ParseError):
            simulator.parse_configuration(source, generate(2))

    def test_json_file(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text(json.dumps({"0": 2, "5": 3}))
        config = simulator.parse_configuration(str(path), generate(2))
        assert config.counts == (2, 0, 0, 0, 0, 3)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ParseError):
            simulator.parse_configuration(str(tmp_path / "nope.json"), generate(2))

    def test_json_must_be_object(self, tmp_path):
        path = tmp_path / "config.json"
        path.write_text("[1, 2]")
        with pytest.raises(ParseError):
            simulator.parse_configuration(str(path), generate(2))
