import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gasketgraph.errors import CornerError, DomainError, NoSubcopyError, SizeLimitError
from gasketgraph.graph import (
    CORNERS,
    Coloring,
    Coord,
    degree_census,
    edge_count,
    embed,
    generate,
    is_connected,
    parse_corner,
    recursive_coloring,
    subcopy,
    third_corner,
    three_coloring,
    vertex_count,
)
from gasketgraph.validator import validate_coloring

levels = st.integers(min_value=1, max_value=6)


class TestCounts:
    @pytest.mark.parametrize(
        "n, vertices, edges",
        [(1, 3, 3), (2, 6, 9), (3, 15, 27), (4, 42, 81)],
    )
    def test_small_levels(self, n, vertices, edges):
        g = generate(n)
        assert (g.vertex_count, g.edge_count) == (vertices, edges)
        assert (vertex_count(n), edge_count(n)) == (vertices, edges)

    def test_closed_form_beyond_generation(self):
        assert vertex_count(8) == 3282
        assert edge_count(8) == 6561

    @given(n=st.integers(min_value=1, max_value=30))
    def test_recurrences(self, n):
        assert vertex_count(n + 1) == 3 * vertex_count(n) - 3
        assert vertex_count(n + 1) == vertex_count(n) + 3**n
        assert edge_count(n + 1) == 3 * edge_count(n)

    def test_rejects_level_zero(self):
        with pytest.raises(DomainError):
            vertex_count(0)
        with pytest.raises(DomainError):
            edge_count(0)


class TestGenerate:
    def test_s1(self):
        g = generate(1)
        assert g.vertices == (Coord(0, 1), Coord(0, 0), Coord(1, 0))
        assert sorted(g.edges()) == [(0, 1), (0, 2), (1, 2)]

    def test_corners(self):
        g = generate(3)
        assert [g.vertices[c] for c in g.corners] == [Coord(0, 4), Coord(0, 0), Coord(4, 0)]
        assert [g.vertices[m] for m in g.middles] == [Coord(2, 0), Coord(0, 2), Coord(2, 2)]

    def test_canonical_order(self):
        g = generate(4)
        keys = [(-c.b, c.a) for c in g.vertices]
        assert keys == sorted(keys)

    def test_lattice_neighbor_that_is_not_an_edge(self):
        g = generate(3)
        u, v = g.index_of((2, 1)), g.index_of((1, 2))
        assert not g.has_edge(u, v)

    @given(n=levels)
    def test_degrees(self, n):
        g = generate(n)
        census = degree_census(g)
        assert census == ({2: 3} if n == 1 else {2: 3, 4: g.vertex_count - 3})
        assert all(g.degree(c) == 2 for c in g.corners)

    @given(n=levels)
    def test_connected(self, n):
        assert is_connected(generate(n))

    def test_ceiling(self):
        with pytest.raises(SizeLimitError):
            generate(13)
        with pytest.raises(SizeLimitError):
            generate(0)

    def test_ceiling_follows_environment(self, monkeypatch):
        monkeypatch.setenv("GASKET_MAX_LEVEL", "3")
        generate(3)
        with pytest.raises(SizeLimitError):
            generate(4)

    def test_to_networkx(self):
        g = generate(3)
        graph = g.to_networkx()
        assert graph.number_of_nodes() == 15
        assert graph.number_of_edges() == 27
        assert graph.nodes[g.corner("T")]["coord"] == (0, 4)
        assert nx.diameter(graph) == 4


class TestCorners:
    def test_parse(self):
        assert parse_corner(" t ") == "T"
        with pytest.raises(CornerError):
            parse_corner("X")

    def test_third_corner(self):
        assert third_corner("T", "L") == "R"
        with pytest.raises(CornerError):
            third_corner("L", "L")


class TestSubcopy:
    def test_top_copy_of_s3(self):
        g = generate(3)
        sub, offset = subcopy(g, "T")
        corners = {c.shift(offset.a, offset.b) for c in (sub.vertices[i] for i in sub.corners)}
        assert corners == {Coord(0, 2), Coord(2, 2), Coord(0, 4)}

    def test_s1_has_none(self):
        with pytest.raises(NoSubcopyError):
            subcopy(generate(1), "L")

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_copies_partition_edges(self, n):
        g = generate(n)
        seen = []
        for label in CORNERS:
            sub, offset = subcopy(g, label)
            mapping = embed(g, sub, offset)
            seen.extend(tuple(sorted((mapping[u], mapping[v]))) for u, v in sub.edges())
        assert len(seen) == len(set(seen)) == g.edge_count
        assert set(seen) == set(g.edges())

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_copies_share_only_touching_corners(self, n):
        g = generate(n)
        vertex_sets = {}
        for label in CORNERS:
            sub, offset = subcopy(g, label)
            vertex_sets[label] = set(embed(g, sub, offset))
        assert vertex_sets["L"] & vertex_sets["R"] == {g.middles[0]}
        assert vertex_sets["L"] & vertex_sets["T"] == {g.middles[1]}
        assert vertex_sets["R"] & vertex_sets["T"] == {g.middles[2]}


class TestColoring:
    @given(n=levels)
    def test_formula_is_proper(self, n):
        g = generate(n)
        coloring = three_coloring(g)
        assert validate_coloring(g, coloring)[0]
        assert coloring.colors_used == 3

    @given(n=levels)
    def test_insertion_is_proper(self, n):
        g = generate(n)
        coloring = recursive_coloring(g)
        assert validate_coloring(g, coloring)[0]
        assert coloring.colors_used == 3

    def test_corners_get_distinct_colors(self):
        g = generate(4)
        coloring = three_coloring(g)
        assert len({coloring.assignment[c] for c in g.corners}) == 3

    def test_broken_coloring_is_reported(self):
        g = generate(2)
        ok, errors = validate_coloring(g, Coloring((0, 1, 2, 0, 1, 0)))
        assert not ok
        assert any("monochromatic" in e for e in errors)


@pytest.mark.slow
@pytest.mark.parametrize("n", [7, 8])
class TestLargeLevels:
    def test_counts(self, n):
        g = generate(n)
        assert (g.vertex_count, g.edge_count) == (vertex_count(n), edge_count(n))

    def test_degrees_and_connectivity(self, n):
        g = generate(n)
        assert degree_census(g) == {2: 3, 4: g.vertex_count - 3}
        assert is_connected(g)

    def test_colorings(self, n):
        g = generate(n)
        assert validate_coloring(g, three_coloring(g))[0]
        assert validate_coloring(g, recursive_coloring(g))[0]
