import networkx as nx
import pytest
from hypothesis import given

from models import Color, ColoringError, EdgeColoring, GraphCodecError, GraphError

from graphs import build_graph, complete_graph, cycle_graph, path_graph, to_networkx
from utils.dot_export import to_dot
from utils.graph_codec import (
    coloring_from_json,
    coloring_to_json,
    decode_graph6,
    dumps_report,
    encode_graph6,
    graph_from_json,
    graph_to_json,
    read_graph,
    write_graph,
)
from utils.named_graphs import load_graph, named_graph
from tests.strategies import PROPERTY_SETTINGS, graphs


class TestGraph6:
    def test_triangle(self):
        assert encode_graph6(complete_graph(3)) == "Bw"
        assert decode_graph6("Bw").same_edges(complete_graph(3))

    def test_header_is_accepted(self):
        assert decode_graph6(">>graph6<<Bw\n").same_edges(complete_graph(3))

    def test_bytes_input(self):
        assert decode_graph6(b"Bw").num_edges == 3

    @pytest.mark.parametrize("n", [0, 1])
    def test_tiny_graphs(self, n):
        g = build_graph(n, [])
        assert decode_graph6(encode_graph6(g)).n == n

    def test_bad_byte_reports_offset(self):
        with pytest.raises(GraphCodecError) as err:
            decode_graph6("B!")
        assert err.value.offset == 1

    def test_bad_byte_offset_counts_header(self):
        with pytest.raises(GraphCodecError) as err:
            decode_graph6(">>graph6<<B!")
        assert err.value.offset == 11

    def test_truncated_body(self):
        with pytest.raises(GraphCodecError, match="data bytes"):
            decode_graph6("D?")

    def test_large_graphs_rejected(self):
        with pytest.raises(GraphCodecError, match="more than 62"):
            decode_graph6("~?@?" + "?" * 10)
        with pytest.raises(GraphError):
            encode_graph6(complete_graph(63))

    @given(graphs(max_n=12))
    @PROPERTY_SETTINGS
    def test_decoding_matches_networkx(self, g):
        text = encode_graph6(g)
        if g.n > 1:
            reference = nx.from_graph6_bytes(text.encode("ascii"))
            assert sorted(tuple(sorted(e)) for e in reference.edges()) == list(g.edges)
        assert decode_graph6(text).same_edges(g)


class TestJson:
    def test_graph_json_is_sorted_and_keeps_roles(self):
        g = build_graph(3, [(2, 1), (0, 1)], {"S": [2, 0]})
        assert graph_to_json(g) == '{"n": 3, "edges": [[0, 1], [1, 2]], "roles": {"S": [0, 2]}}'
        assert graph_from_json(graph_to_json(g)) == g

    def test_malformed_json_reports_offset(self):
        with pytest.raises(GraphCodecError) as err:
            graph_from_json('{"n": 3, "edges": [[0, 1],]}')
        assert err.value.offset > 0

    def test_missing_fields(self):
        with pytest.raises(GraphCodecError):
            graph_from_json('{"edges": []}')

    @pytest.mark.parametrize(
        "doc",
        [
            '{"n": 3, "edges": [["a", 1]]}',
            '{"n": 3, "edges": [[0, 1.7]]}',
            '{"n": 3, "edges": [[true, 2]]}',
            '{"n": 3.0, "edges": []}',
            '{"n": 3, "edges": [[0, 1]], "roles": {"S": "ab"}}',
            '{"n": 3, "edges": [[0, 1]], "roles": {"S": [0, "1"]}}',
            '{"n": 3, "edges": [[0, 1]], "roles": {"S": 2}}',
        ],
    )
    def test_graph_rejects_non_integer_vertices(self, doc):
        with pytest.raises(GraphCodecError):
            graph_from_json(doc)

    @pytest.mark.parametrize(
        "doc",
        [
            '{"edges": [[0, 1, "R"], [1, 2.0, "B"]]}',
            '{"edges": [[0, false, "R"], [1, 2, "B"]]}',
            '{"edges": [[0, 1, "R"], [1, 0, "B"], [1, 2, "B"]]}',
        ],
    )
    def test_coloring_rejects_bad_entries(self, doc):
        with pytest.raises(GraphCodecError):
            coloring_from_json(doc, path_graph(3))

    def test_coloring_tolerates_repeated_agreeing_entries(self):
        c = coloring_from_json('{"edges": [[0, 1, "R"], [1, 0, "R"], [1, 2, "B"]]}', path_graph(3))
        assert c.colors == (Color.RED, Color.BLUE)

    def test_coloring_round_trip_through_host(self):
        host = path_graph(3)
        c = EdgeColoring(host, (Color.RED, Color.BLUE))
        assert coloring_from_json(coloring_to_json(c), host) == c

    def test_coloring_on_wrong_host(self):
        with pytest.raises(ColoringError):
            coloring_from_json('{"edges": [[0, 1, "R"]]}', path_graph(3))

    def test_report_is_stable(self):
        assert dumps_report({"b": 1, "a": [1, 2]}) == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}'


class TestFiles:
    @pytest.mark.parametrize("suffix, fmt", [(".g6", "graph6"), (".json", "json")])
    def test_write_then_read(self, tmp_path, suffix, fmt):
        path = tmp_path / f"c5{suffix}"
        write_graph(path, cycle_graph(5), fmt)
        assert read_graph(path).same_edges(cycle_graph(5))
        assert load_graph(str(path)).same_edges(cycle_graph(5))

    def test_unknown_suffix(self, tmp_path):
        path = tmp_path / "g.txt"
        path.write_text("Bw")
        with pytest.raises(GraphCodecError):
            read_graph(path)


class TestNamedGraphs:
    @pytest.mark.parametrize(
        "token, n, m",
        [("k6", 6, 15), ("c5", 5, 5), ("p3", 3, 2), ("s3", 4, 3), ("k3x3", 6, 9), ("petersen", 10, 15), ("h3_2", 4, 5), ("m2", 4, 2), ("e4", 4, 0)],
    )
    def test_tokens(self, token, n, m):
        g = named_graph(token)
        assert (g.n, g.num_edges) == (n, m)

    def test_unknown_token(self):
        with pytest.raises(GraphError, match="unknown graph name"):
            named_graph("q7")


class TestDot:
    def test_colors_and_clusters(self):
        g = build_graph(4, [(0, 1), (1, 2), (2, 3)], {"e": [0, 1]})
        c = EdgeColoring(build_graph(4, [(0, 1), (1, 2)]), (Color.RED, Color.BLUE))
        dot = to_dot(g, c)
        assert "subgraph cluster_0" in dot
        assert "color=red" in dot and "color=blue" in dot
        assert "dashed" in dot
