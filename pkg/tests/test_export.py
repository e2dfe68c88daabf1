import json

import pytest

from gasketgraph.errors import ParseError
from gasketgraph.export import export, parse, write_export
from gasketgraph.graph import generate


class TestExport:
    def test_json(self):
        payload = json.loads(export(generate(2), "json"))
        assert payload["level"] == 2
        assert payload["vertex_count"] == 6
        assert payload["edge_count"] == 9
        assert payload["vertices"][0] == [0, 2]
        assert len(payload["edges"]) == 9

    def test_edgelist(self):
        lines = export(generate(3), "edgelist").decode().splitlines()
        assert len(lines) == 27
        assert all(int(u) < int(v) for u, v in (line.split() for line in lines))

    def test_dot(self):
        text = export(generate(2), "dot").decode()
        assert text.startswith("graph S2 {")
        assert text.count(" -- ") == 9
        assert '[pos="0,2!"]' in text

    @pytest.mark.parametrize("fmt", ["dot", "json", "edgelist"])
    def test_deterministic(self, fmt):
        assert export(generate(4), fmt) == export(generate(4), fmt)

    def test_unknown_format(self):
        with pytest.raises(ParseError):
            export(generate(1), "gml")  # type: ignore[arg-type]

    def test_write(self, tmp_path):
        path = tmp_path / "s3.json"
        write_export(generate(3), "json", path)
        assert path.read_bytes() == export(generate(3), "json")

    def test_write_to_missing_directory(self, tmp_path):
        with pytest.raises(OSError):
            write_export(generate(1), "json", tmp_path / "missing" / "s1.json")


class TestParse:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_inverts_json_export(self, n):
        g = generate(n)
        assert parse(export(g, "json")) == g

    @pytest.mark.parametrize("data", ["not json", "{}", '{"level": 1, "vertices": [[0, 0]], "edges": [[0, 5]]}'])
    def test_rejects_garbage(self, data):
        with pytest.raises(ParseError):
            parse(data)

    def test_rejects_side_mismatch(self):
        payload = json.loads(export(generate(2), "json"))
        payload["side"] = 4
        with pytest.raises(ParseError):
            parse(json.dumps(payload))

    def test_rejects_level_mismatch(self):
        payload = json.loads(export(generate(2), "json"))
        payload["level"] = 3
        del payload["side"]
        with pytest.raises(ParseError, match="S3 has 15 vertices"):
            parse(json.dumps(payload))

    def test_rejects_missing_corners(self):
        payload = json.loads(export(generate(2), "json"))
        payload["vertices"] = [[a + 1, b] for a, b in payload["vertices"]]
        with pytest.raises(ParseError, match="Corners"):
            parse(json.dumps(payload))
