import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from models import NoCandidateArrowsError, NotArrowingError

from constructions import make_H_t_d
from engine import (
    check_lower_bounds,
    clique_apex_degree,
    extract_minimal_subgraph,
    is_ramsey_minimal,
    ramsey_number_desk,
    s_min_degree_witness_search,
)
from graphs import add_vertex, build_graph, complete_graph, cycle_graph, path_graph, star_graph
from tests.strategies import PROPERTY_SETTINGS, graphs


class TestMinimality:
    def test_triangle_is_minimal_for_p3(self, k3, p3):
        assert is_ramsey_minimal(k3, p3)

    def test_isolated_vertex_breaks_minimality(self, k3, p3):
        assert not is_ramsey_minimal(add_vertex(k3, []), p3)

    def test_non_arrowing_graph_is_not_minimal(self, p3):
        assert not is_ramsey_minimal(path_graph(3), p3)

    def test_k4_is_not_minimal_for_p3(self, p3):
        assert not is_ramsey_minimal(complete_graph(4), p3)

    def test_k6_reduces_to_itself_for_triangles(self, engine, k3):
        minimal = extract_minimal_subgraph(complete_graph(6), k3, engine=engine)
        assert minimal.same_edges(complete_graph(6))
        assert min(minimal.degrees) >= 4
        assert min(minimal.degrees) >= 2 * min(k3.degrees) - 1
        assert is_ramsey_minimal(minimal, k3, engine=engine)

    def test_pendant_edge_is_removed(self, engine, k3):
        f = add_vertex(complete_graph(6), [0])
        minimal = extract_minimal_subgraph(f, k3, engine=engine)
        assert minimal.same_edges(complete_graph(6))

    @given(graphs(min_n=6, max_n=8, max_edges=8), st.sampled_from([complete_graph(3), cycle_graph(4)]))
    @settings(PROPERTY_SETTINGS, max_examples=10)
    def test_minimal_graphs_meet_the_degree_bound(self, extra, h):
        f = build_graph(extra.n, list(complete_graph(6).edges) + list(extra.edges))
        minimal = extract_minimal_subgraph(f, h)
        assert min(minimal.degrees) >= 2 * min(h.degrees) - 1
        assert is_ramsey_minimal(minimal, h)

    def test_extraction_strips_isolated_vertices(self, p3):
        padded = build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4)])
        minimal = extract_minimal_subgraph(padded, p3)
        assert minimal.n == 3
        assert minimal.num_edges == 3

    def test_extraction_needs_an_arrowing_input(self, k3):
        with pytest.raises(NotArrowingError):
            extract_minimal_subgraph(complete_graph(5), k3)


class TestRamseyNumbers:
    @pytest.mark.parametrize(
        "h, n_max, expected",
        [
            (complete_graph(3), 8, 6),
            (path_graph(3), 5, 3),
            (complete_graph(3), 4, None),
            (star_graph(3), 8, 6),
        ],
    )
    def test_small_values(self, h, n_max, expected):
        assert ramsey_number_desk(h, n_max) == expected

    @pytest.mark.parametrize("h", [path_graph(3), complete_graph(3)])
    def test_degree_search_stays_below_ramsey_number(self, h):
        r = ramsey_number_desk(h, 6)
        result = s_min_degree_witness_search(h, [complete_graph(r)])
        assert r - 1 >= result.best


class TestDegreeSearch:
    def test_triangle_candidate(self, k3, p3):
        result = s_min_degree_witness_search(p3, [k3])
        assert result.best == 2
        assert result.candidates_arrowing == 1
        assert result.witness.same_edges(k3)

    def test_smallest_degree_wins(self, k3, p3, s3):
        result = s_min_degree_witness_search(p3, [k3, s3])
        assert result.best == 1
        assert result.candidates_arrowing == 2
        assert result.witness.same_edges(s3)

    def test_non_arrowing_candidates_are_skipped(self, k3, p3):
        result = s_min_degree_witness_search(p3, [path_graph(3), k3])
        assert result.candidates_arrowing == 1

    def test_no_candidate_arrows(self, k3):
        with pytest.raises(NoCandidateArrowsError):
            s_min_degree_witness_search(k3, [complete_graph(5), cycle_graph(5)])


class TestLowerBounds:
    def test_clique_apex_degree(self):
        assert clique_apex_degree(make_H_t_d(3, 2)) == 2
        assert clique_apex_degree(cycle_graph(5)) is None

    def test_bounds_for_p3(self, k3, p3):
        report = check_lower_bounds(k3, p3)
        assert report["min_degree"] == 2
        assert report["lower_bounds"]["trivial"] == 1
        assert report["consistent"]

    def test_bounds_for_clique_with_apex(self):
        h = make_H_t_d(3, 2)
        report = check_lower_bounds(complete_graph(4), h)
        assert report["lower_bounds"] == {"trivial": 3, "clique_apex": 4}
        assert not report["consistent"]
