"""Arrowing engine against the brute-force oracle and the classical small cases."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from models import BudgetExhausted, Color, ColoringError, PreconditionError, Verdict

from coloring import is_mono_free
from engine import ArrowingEngine, SearchBudget, arrows, epsilon_arrows, find_coloring, naive_arrows
from graphs import build_graph, complete_graph, cycle_graph, matching_graph, path_graph, relabel, star_graph
from tests.strategies import PROPERTY_SETTINGS, graphs

TARGETS = [path_graph(3), complete_graph(3), cycle_graph(4), matching_graph(2), path_graph(4), star_graph(3)]


class TestClassicalCases:
    def test_k6_arrows_triangle(self, engine, k3):
        result = engine.arrows(complete_graph(6), k3)
        assert result.verdict is Verdict.ARROWS
        assert result.witness is None
        assert result.stats.nodes > 0

    def test_k5_has_triangle_free_coloring(self, engine, k3):
        result = engine.arrows(complete_graph(5), k3)
        assert result.verdict is Verdict.NOT_ARROWS
        assert result.witness.host.same_edges(complete_graph(5))
        assert is_mono_free(result.witness, k3)[0]

    def test_triangle_arrows_p3(self, k3, p3):
        assert arrows(k3, p3).arrows

    def test_empty_target_rejected(self, engine, k3):
        with pytest.raises(PreconditionError):
            engine.arrows(k3, build_graph(2, []))

    def test_host_without_edges_never_arrows(self, engine, p3):
        result = engine.arrows(build_graph(4, []), p3)
        assert not result.arrows
        assert result.witness.colors == ()

    def test_report_drops_timing_when_asked(self, engine, k3):
        report = engine.arrows(complete_graph(5), k3).to_dict(with_timing=False)
        assert report["verdict"] == "not_arrows"
        assert "wall_time_ms" not in report["stats"]
        assert len(report["witness"]["edges"]) == 10


class TestAgainstOracle:
    @given(graphs(max_n=7, max_edges=12), st.sampled_from(TARGETS))
    @PROPERTY_SETTINGS
    def test_agrees_with_enumeration(self, f, h):
        result = ArrowingEngine().arrows(f, h)
        assert result.arrows == naive_arrows(f, h)
        if result.witness is not None:
            assert is_mono_free(result.witness, h)[0]

    @given(graphs(max_n=7, max_edges=12), st.sampled_from(TARGETS))
    @settings(PROPERTY_SETTINGS, max_examples=100)
    def test_symmetry_options_do_not_change_the_verdict(self, f, h):
        plain = ArrowingEngine(swap_symmetry=False).arrows(f, h).arrows
        assert ArrowingEngine(use_automorphisms=True).arrows(f, h).arrows == plain

    @given(st.data())
    @settings(PROPERTY_SETTINGS, max_examples=300)
    def test_monotone_under_adding_edges(self, data):
        f = data.draw(graphs(min_n=3, max_n=7, max_edges=9))
        extra = data.draw(graphs(min_n=f.n, max_n=f.n, max_edges=4))
        h = data.draw(st.sampled_from(TARGETS))
        bigger = build_graph(f.n, list(f.edges) + list(extra.edges))
        if arrows(f, h).arrows:
            assert arrows(bigger, h).arrows

    @given(st.data())
    @PROPERTY_SETTINGS
    def test_invariant_under_relabel(self, data):
        f = data.draw(graphs(min_n=1, max_n=7, max_edges=12))
        perm = data.draw(st.permutations(range(f.n)))
        h = data.draw(st.sampled_from(TARGETS))
        assert arrows(relabel(f, perm), h).arrows == arrows(f, h).arrows


class TestFixedEdges:
    def test_compatible_fixing(self, p3):
        f = path_graph(4)
        coloring = find_coloring(f, p3, {(0, 1): Color.RED, (3, 2): Color.RED})
        assert coloring is not None
        assert coloring.color(0, 1) is Color.RED and coloring.color(2, 3) is Color.RED
        assert coloring.color(1, 2) is Color.BLUE

    def test_conflicting_fixing(self, p3):
        assert find_coloring(path_graph(4), p3, {(0, 1): Color.RED, (2, 3): Color.BLUE}) is None

    def test_fixed_colors_alone_can_force_a_copy(self, p3):
        assert find_coloring(path_graph(3), p3, {(0, 1): Color.BLUE, (1, 2): Color.BLUE}) is None

    def test_fixed_edge_must_belong_to_host(self, p3):
        with pytest.raises(ColoringError):
            find_coloring(path_graph(4), p3, {(0, 3): Color.RED})

    def test_fixing_blue_first_is_honoured(self, engine, k3):
        coloring = engine.find_coloring(complete_graph(5), k3, {(0, 1): Color.BLUE})
        assert coloring is not None and coloring.color(0, 1) is Color.BLUE
        assert is_mono_free(coloring, k3)[0]


class TestBudgetAndParallelism:
    def test_node_limit(self, k3):
        with pytest.raises(BudgetExhausted) as info:
            ArrowingEngine(max_nodes=5).arrows(complete_graph(6), k3)
        assert info.value.stats is not None
        assert info.value.stats.nodes > 5

    def test_per_call_budget_overrides_engine(self, engine, k3):
        with pytest.raises(BudgetExhausted):
            engine.arrows(complete_graph(6), k3, SearchBudget(max_nodes=5))

    @pytest.mark.parametrize("n, expected", [(5, False), (6, True)])
    def test_parallel_split(self, k3, n, expected):
        result = ArrowingEngine(threads=4, split_depth=3).arrows(complete_graph(n), k3)
        assert result.arrows == expected
        assert result.stats.subtrees > 1
        if not expected:
            assert is_mono_free(result.witness, k3)[0]

    @pytest.mark.parametrize(
        "f, h",
        [
            (cycle_graph(7), path_graph(3)),
            (complete_graph(4), path_graph(3)),
            (build_graph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]), path_graph(3)),
            (complete_graph(5), cycle_graph(4)),
        ],
    )
    def test_parallel_agrees_with_sequential(self, f, h):
        parallel = ArrowingEngine(threads=3, split_depth=2).arrows(f, h)
        assert parallel.arrows == naive_arrows(f, h)
        if parallel.witness is not None:
            assert is_mono_free(parallel.witness, h)[0]

    def test_parallel_node_limit(self, k3):
        with pytest.raises(BudgetExhausted) as info:
            ArrowingEngine(threads=2, split_depth=2, max_nodes=20).arrows(complete_graph(6), k3)
        assert info.value.stats.nodes > 0

    def test_parallel_fixed_edges(self, k3):
        engine = ArrowingEngine(threads=2, split_depth=2)
        coloring = engine.find_coloring(complete_graph(5), k3, {(0, 1): Color.BLUE, (2, 3): Color.RED})
        assert coloring.color(0, 1) is Color.BLUE and coloring.color(2, 3) is Color.RED
        assert is_mono_free(coloring, k3)[0]

    def test_deterministic_witness_is_reproducible(self, k3):
        engine = ArrowingEngine(threads=4, deterministic=True)
        first = engine.arrows(complete_graph(5), k3).witness
        second = engine.arrows(complete_graph(5), k3).witness
        assert first == second


class TestEpsilonArrowing:
    def test_whole_vertex_set(self, engine, k3):
        assert engine.epsilon_counterexample(complete_graph(6), k3, 1.0) is None

    def test_half_of_k6(self, engine, k3):
        subset, witness = engine.epsilon_counterexample(complete_graph(6), k3, 0.5)
        assert len(subset) == 3
        assert is_mono_free(witness, k3)[0]
        assert not epsilon_arrows(complete_graph(6), k3, 0.5)

    @pytest.mark.parametrize("eps", [0.0, -0.5, 1.5])
    def test_eps_range(self, engine, k3, eps):
        with pytest.raises(PreconditionError):
            engine.epsilon_counterexample(complete_graph(6), k3, eps)
