import json
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gasketgraph import hamilton
from gasketgraph.errors import CornerError, LengthRangeError
from gasketgraph.graph import CORNERS, generate, third_corner
from gasketgraph.validator import validate_cycle, validate_path

PAIRS = list(permutations(CORNERS, 2))
LARGE = [pytest.param(7, marks=pytest.mark.slow), pytest.param(8, marks=pytest.mark.slow)]


@st.composite
def path_requests(draw, max_level=4):
    n = draw(st.integers(min_value=1, max_value=max_level))
    start, end = draw(st.sampled_from(PAIRS))
    avoid = draw(st.booleans())
    lo, hi = hamilton.path_bounds(n, avoid)
    length = draw(st.integers(min_value=lo, max_value=hi))
    return n, start, end, avoid, length


class TestPathBounds:
    @pytest.mark.parametrize("n, expected", [(1, (1, 2)), (2, (2, 5)), (3, (4, 14)), (4, (8, 41))])
    def test_plain(self, n, expected):
        assert hamilton.path_bounds(n) == expected

    def test_avoid(self):
        assert hamilton.path_bounds(3, avoid=True) == (4, 13)


class TestHamPath:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, *LARGE])
    @pytest.mark.parametrize("start, end", PAIRS)
    def test_visits_every_vertex(self, n, start, end):
        g = generate(n)
        path = hamilton.ham_path(g, start, end)
        ok, errors = validate_path(g, path.vertices, g.corner(start), g.corner(end), covers=range(g.vertex_count))
        assert ok, errors

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, *LARGE])
    @pytest.mark.parametrize("start, end", PAIRS)
    def test_avoid_skips_only_the_third_corner(self, n, start, end):
        g = generate(n)
        skipped = g.corner(third_corner(start, end))
        path = hamilton.ham_path_avoid(g, start, end)
        expected = [v for v in range(g.vertex_count) if v != skipped]
        ok, errors = validate_path(g, path.vertices, g.corner(start), g.corner(end), covers=expected)
        assert ok, errors

    def test_same_corner(self):
        with pytest.raises(CornerError):
            hamilton.ham_path(generate(2), "T", "T")

    def test_unknown_corner(self):
        with pytest.raises(CornerError):
            hamilton.ham_path(generate(2), "T", "Q")

    def test_coords(self):
        g = generate(2)
        path = hamilton.ham_path(g, "T", "L")
        coords = path.coords(g)
        assert coords[0] == (0, 2)
        assert coords[-1] == (0, 0)
        assert len(coords) == 6


class TestPathOfLength:
    @given(request=path_requests())
    def test_exact_length(self, request):
        n, start, end, avoid, length = request
        g = generate(n)
        path = hamilton.path_of_length(g, start, end, length, avoid=avoid)
        assert path.length == length
        ok, errors = validate_path(g, path.vertices, g.corner(start), g.corner(end), length=length)
        assert ok, errors
        if avoid:
            assert g.corner(third_corner(start, end)) not in path.vertices

    def test_every_length_in_s4(self):
        g = generate(4)
        lo, hi = hamilton.path_bounds(4)
        for length in range(lo, hi + 1):
            assert hamilton.path_of_length(g, "L", "R", length).length == length

    @pytest.mark.parametrize("length", [3, 15, 0, -1])
    def test_out_of_range(self, length):
        with pytest.raises(LengthRangeError):
            hamilton.path_of_length(generate(3), "T", "R", length)

    def test_avoid_maximum_is_one_shorter(self):
        with pytest.raises(LengthRangeError):
            hamilton.path_of_length(generate(3), "T", "R", 14, avoid=True)


class TestCycles:
    def test_s1_triangle(self):
        cycle = hamilton.ham_cycle(generate(1))
        assert cycle.length == 3
        assert sorted(cycle.vertices) == [0, 1, 2]

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, *LARGE])
    def test_hamiltonian(self, n):
        g = generate(n)
        cycle = hamilton.ham_cycle(g)
        ok, errors = validate_cycle(g, cycle.vertices, length=g.vertex_count, covers=range(g.vertex_count))
        assert ok, errors

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_pancyclic(self, n):
        g = generate(n)
        for length in range(3, g.vertex_count + 1):
            assert hamilton.cycle_of_length(g, length).length == length

    @given(length=st.integers(min_value=3, max_value=123))
    def test_random_lengths_in_s5(self, length):
        g = generate(5)
        cycle = hamilton.cycle_of_length(g, length)
        assert validate_cycle(g, cycle.vertices, length=length)[0]

    @pytest.mark.parametrize("length", [2, 16])
    def test_out_of_range(self, length):
        with pytest.raises(LengthRangeError):
            hamilton.cycle_of_length(generate(3), length)


class TestCertificateJson:
    def test_path(self):
        g = generate(2)
        payload = json.loads(hamilton.certificate_json(hamilton.ham_path(g, "L", "R"), g))
        assert payload["kind"] == "path"
        assert payload["length"] == 5
        assert len(payload["vertices"]) == 6
        assert payload["coords"][0] == [0, 0]

    def test_cycle_without_coords(self):
        payload = json.loads(hamilton.certificate_json(hamilton.ham_cycle(generate(1))))
        assert set(payload) == {"kind", "length", "vertices"}
        assert payload["kind"] == "cycle"
        assert sorted(payload["vertices"]) == [0, 1, 2]
