import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from models import Color, ColoringError, EdgeColoring, PreconditionError, count_patterns

from coloring import (
    color_pattern,
    extend_packing,
    extend_split,
    find_mono_copy,
    is_mono_free,
    neighborhood_mono_clique,
    red_clique_packing,
    swap_colors,
)
from constructions import make_H_t_d
from engine import ArrowingEngine
from graphs import build_graph, complete_graph, cycle_graph, delete_vertex_edges, path_graph
from tests.strategies import HEAVY_SETTINGS, colored_graphs, graphs


class TestQueries:
    def test_red_triangle_found_first(self):
        k4 = complete_graph(4)
        c = EdgeColoring.uniform(k4, Color.RED)
        color, embedding = find_mono_copy(c, complete_graph(3))
        assert color is Color.RED
        assert embedding.is_valid(complete_graph(3), k4)

    def test_blue_copy_reported(self):
        c = EdgeColoring.uniform(complete_graph(3), Color.BLUE)
        free, found = is_mono_free(c, complete_graph(3))
        assert not free and found[0] is Color.BLUE

    def test_c5_split_coloring_is_triangle_free(self):
        k5 = complete_graph(5)
        outer = {(i, (i + 1) % 5) for i in range(5)}
        colors = {e: Color.RED if e in outer or (e[1], e[0]) in outer else Color.BLUE for e in k5.edges}
        c = EdgeColoring.from_mapping(k5, colors)
        assert is_mono_free(c, complete_graph(3)) == (True, None)

    def test_color_pattern(self):
        g = complete_graph(4)
        c = EdgeColoring(g, (Color.RED, Color.BLUE, Color.RED, Color.BLUE, Color.BLUE, Color.RED))
        pattern = color_pattern(c, 0, [3, 1])
        assert pattern.as_string() == "RR"
        assert count_patterns(2) == 4

    def test_color_pattern_needs_edges(self):
        c = EdgeColoring.uniform(path_graph(3), Color.RED)
        with pytest.raises(ColoringError):
            color_pattern(c, 0, [2])

    def test_coloring_length_checked(self):
        with pytest.raises(ColoringError):
            EdgeColoring(path_graph(3), (Color.RED,))

    def test_neighborhood_mono_clique(self):
        c = EdgeColoring.uniform(complete_graph(4), Color.RED)
        assert neighborhood_mono_clique(c, 0, Color.RED, 2) is not None
        assert neighborhood_mono_clique(c, 0, Color.BLUE, 1) is None

    @given(colored_graphs(max_n=8), st.sampled_from([complete_graph(3), path_graph(3), cycle_graph(4)]))
    @HEAVY_SETTINGS
    def test_swap_symmetry(self, c, h):
        free, found = is_mono_free(c, h)
        swapped_free, swapped_found = is_mono_free(swap_colors(c), h)
        assert free == swapped_free
        if found is not None:
            assert find_mono_copy(swap_colors(c), h) is not None


class TestExtendSplit:
    def test_degree_bound_enforced(self):
        f = complete_graph(5)
        base = EdgeColoring.uniform(delete_vertex_edges(f, 0), Color.RED)
        with pytest.raises(PreconditionError):
            extend_split(f, 0, base, 2)

    def test_base_must_match_f_minus_v(self):
        f = path_graph(3)
        with pytest.raises(ColoringError):
            extend_split(f, 1, EdgeColoring.uniform(f, Color.RED), 2)

    def test_lowest_neighbours_red(self):
        f = build_graph(4, [(0, 1), (0, 2), (0, 3)])
        base = EdgeColoring.uniform(delete_vertex_edges(f, 0), Color.RED)
        ext = extend_split(f, 0, base, 3)
        assert [ext.color(0, w) for w in (1, 2, 3)] == [Color.RED, Color.RED, Color.BLUE]

    def test_triangle_with_red_base_edge(self, k3):
        base = EdgeColoring.uniform(delete_vertex_edges(k3, 0), Color.RED)
        ext = extend_split(k3, 0, base, 2)
        assert {ext.color(0, 1), ext.color(0, 2)} == {Color.RED, Color.BLUE}
        assert is_mono_free(ext, k3)[0]

    @given(
        graphs(min_n=2, max_n=9, max_edges=16),
        st.sampled_from([cycle_graph(4), cycle_graph(5), complete_graph(3)]),
        st.data(),
    )
    @settings(HEAVY_SETTINGS, max_examples=500)
    def test_extension_stays_mono_free(self, f, h, data):
        delta = min(h.degrees)
        low = [v for v in range(f.n) if f.degree(v) <= 2 * delta - 2]
        assume(low)
        v = data.draw(st.sampled_from(low))
        base = ArrowingEngine(deterministic=True).find_coloring(delete_vertex_edges(f, v), h)
        assume(base is not None)
        assert is_mono_free(extend_split(f, v, base, delta), h)[0]


class TestExtendPacking:
    def test_degree_bound_enforced(self):
        f = complete_graph(5)
        base = EdgeColoring.uniform(delete_vertex_edges(f, 0), Color.BLUE)
        with pytest.raises(PreconditionError):
            extend_packing(f, 0, base, 2)

    def test_packing_is_disjoint_and_red(self):
        g = complete_graph(5)
        base = EdgeColoring.uniform(g, Color.RED)
        packing = red_clique_packing(base, [0, 1, 2, 3, 4], 2)
        assert packing == [(0, 1), (2, 3)]

    @given(graphs(min_n=2, max_n=9, max_edges=16), st.sampled_from([3, 4]), st.data())
    @settings(HEAVY_SETTINGS, max_examples=500)
    def test_extension_stays_mono_free_for_clique_with_apex(self, f, t, data):
        h, d = make_H_t_d(t, 2), 2
        low = [v for v in range(f.n) if f.degree(v) <= 3]
        assume(low)
        v = data.draw(st.sampled_from(low))
        base = ArrowingEngine(deterministic=True).find_coloring(delete_vertex_edges(f, v), h)
        assume(base is not None)
        ext = extend_packing(f, v, base, d)
        assert is_mono_free(ext, h)[0]
        assert neighborhood_mono_clique(ext, v, Color.RED, d) is None
        assert neighborhood_mono_clique(ext, v, Color.BLUE, d) is None
