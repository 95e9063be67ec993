"""Graph primitives, embedding search and exact statistics, with networkx as the oracle."""

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st
from networkx.algorithms.isomorphism import GraphMatcher

from models import Graph, GraphError

from graphs import (
    add_vertex,
    automorphisms,
    build_graph,
    clique_number,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    delete_edge,
    delete_vertex_edges,
    disjoint_union,
    find_embedding,
    graph_stats,
    independence_number,
    induced_subgraph,
    is_connected,
    iter_embeddings,
    join_graphs,
    matching_graph,
    path_graph,
    petersen_graph,
    relabel,
    set_distance,
    star_graph,
    stats_frame,
    strip_isolated,
    to_networkx,
)
from graphs.embedding import RootedMatcher
from tests.strategies import PROPERTY_SETTINGS, graphs


class TestBuildGraph:
    def test_edges_are_normalised_and_deduplicated(self):
        g = build_graph(3, [(1, 0), (0, 1), (2, 1)])
        assert g.edges == ((0, 1), (1, 2))
        assert g.degrees == (1, 2, 1)

    def test_self_loop_rejected(self):
        with pytest.raises(GraphError, match="self-loop"):
            build_graph(3, [(1, 1)])

    def test_out_of_range_endpoint_rejected(self):
        with pytest.raises(GraphError, match="outside"):
            build_graph(3, [(0, 3)])

    def test_role_outside_vertex_set_rejected(self):
        with pytest.raises(GraphError, match="role"):
            build_graph(2, [(0, 1)], {"S": [0, 5]})

    def test_roles_are_frozen_sets(self):
        g = build_graph(4, [(0, 1)], {"S": [2, 3]})
        assert g.role("S") == frozenset({2, 3})


class TestFamilies:
    @pytest.mark.parametrize(
        "g, n, m",
        [
            (complete_graph(6), 6, 15),
            (cycle_graph(5), 5, 5),
            (path_graph(4), 4, 3),
            (star_graph(3), 4, 3),
            (complete_bipartite(3, 3), 6, 9),
            (petersen_graph(), 10, 15),
            (matching_graph(2), 4, 2),
        ],
    )
    def test_sizes(self, g, n, m):
        assert (g.n, g.num_edges) == (n, m)

    def test_petersen_is_3_regular_with_girth_5(self):
        g = petersen_graph()
        assert set(g.degrees) == {3}
        assert nx.girth(to_networkx(g)) == 5

    def test_cycle_needs_three_vertices(self):
        with pytest.raises(GraphError):
            cycle_graph(2)


class TestOperations:
    def test_disjoint_union_offsets_and_roles(self):
        union, offsets = disjoint_union([complete_graph(3), build_graph(2, [(0, 1)], {"e": [0, 1]})])
        assert offsets == [0, 3]
        assert union.num_edges == 4
        assert union.role("part_1.e") == frozenset({3, 4})

    def test_join_adds_every_cross_edge(self):
        joined = join_graphs([cycle_graph(5), matching_graph(2)])
        assert joined.n == 9
        assert joined.num_edges == 5 + 2 + 5 * 4

    def test_induced_subgraph_relabels_ascending(self):
        g = cycle_graph(5)
        sub, mapping = induced_subgraph(g, [4, 0, 1])
        assert mapping == (0, 1, 4)
        assert sorted(sub.edges) == [(0, 1), (0, 2)]

    def test_delete_vertex_edges_keeps_labels(self):
        g = delete_vertex_edges(complete_graph(4), 2)
        assert g.n == 4
        assert g.degree(2) == 0
        assert g.num_edges == 3

    def test_delete_missing_edge_raises(self):
        with pytest.raises(GraphError):
            delete_edge(path_graph(3), 0, 2)

    def test_add_vertex_and_strip(self):
        g = add_vertex(build_graph(3, []), [0, 2], role="apex")
        assert g.neighbors(3) == [0, 2]
        assert g.role("apex") == frozenset({3})
        stripped, mapping = strip_isolated(g)
        assert mapping == (0, 2, 3)
        assert stripped.num_edges == 2

    def test_set_distance(self):
        g = path_graph(6)
        assert set_distance(g, (0, 1), (4, 5)) == 3
        assert set_distance(build_graph(4, [(0, 1)]), [0], [3]) is None

    def test_empty_graph_is_connected(self):
        assert is_connected(Graph(0, ()))


class TestEmbedding:
    def test_petersen_has_c5_but_no_c4(self):
        assert find_embedding(cycle_graph(4), petersen_graph()) is None
        assert find_embedding(cycle_graph(5), petersen_graph()) is not None

    def test_embedding_is_valid(self):
        h, g = path_graph(4), complete_bipartite(2, 3)
        found = find_embedding(h, g)
        assert found is not None and found.is_valid(h, g)

    @pytest.mark.parametrize("g, count", [(cycle_graph(5), 10), (petersen_graph(), 120), (complete_bipartite(3, 3), 72)])
    def test_automorphism_counts(self, g, count):
        assert len(automorphisms(g)) == count

    def test_automorphism_limit(self):
        assert automorphisms(complete_graph(7), limit=100) is None

    def test_rooted_search_uses_the_edge(self):
        g = build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4)])
        matcher = RootedMatcher(complete_graph(3))
        assert matcher.through_edge(g.adj, g.n, 3, 4) is None
        found = matcher.through_edge(g.adj, g.n, 1, 2)
        assert found is not None and {1, 2} <= found.image()

    def test_iter_embeddings_limit(self):
        assert len(list(iter_embeddings(path_graph(2), complete_graph(4), limit=5))) == 5

    @given(graphs(max_n=7), graphs(min_n=1, max_n=4))
    @PROPERTY_SETTINGS
    def test_agrees_with_networkx_monomorphism(self, g, h):
        expected = GraphMatcher(to_networkx(g), to_networkx(h)).subgraph_is_monomorphic()
        found = find_embedding(h, g)
        assert (found is not None) == expected
        if found is not None:
            assert found.is_valid(h, g)

    @given(graphs(min_n=1, max_n=6), graphs(min_n=1, max_n=4))
    @PROPERTY_SETTINGS
    def test_rooted_search_matches_global_search_on_added_edge(self, g, h):
        missing = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
        if not missing or h.num_edges == 0:
            return
        u, v = missing[0]
        before = find_embedding(h, g) is not None
        bigger = build_graph(g.n, list(g.edges) + [(u, v)])
        rooted = RootedMatcher(h).through_edge(bigger.adj, bigger.n, u, v) is not None
        assert (before or rooted) == (find_embedding(h, bigger) is not None)


class TestStats:
    @given(graphs(min_n=1, max_n=9))
    @PROPERTY_SETTINGS
    def test_clique_and_independence_numbers(self, g):
        nxg = to_networkx(g)
        assert clique_number(g) == max(len(c) for c in nx.find_cliques(nxg))
        assert independence_number(g) == max(len(c) for c in nx.find_cliques(nx.complement(nxg)))

    def test_petersen_stats(self):
        stats = graph_stats(petersen_graph())
        assert stats.clique_number == 2
        assert stats.independence_number == 4
        assert stats.is_regular and stats.regular_degree == 3
        assert stats.is_connected

    @given(st.data())
    @PROPERTY_SETTINGS
    def test_stats_invariant_under_relabel(self, data):
        g = data.draw(graphs(min_n=1, max_n=7))
        perm = data.draw(st.permutations(range(g.n)))
        assert graph_stats(relabel(g, perm)) == graph_stats(g)

    def test_stats_frame_columns(self):
        frame = stats_frame([("k4", complete_graph(4)), ("c5", cycle_graph(5))])
        assert list(frame["name"]) == ["k4", "c5"]
        assert list(frame["clique_number"]) == [4, 2]
        assert frame.loc[1, "is_regular"]
