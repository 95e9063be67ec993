import pytest

from models import Color, ColoredConstruction, EdgeColoring, PreconditionError, UsageError

from config import (
    CONSTRUCTION_CONFIGS,
    EXPERIMENT_CONFIGS,
    CommandConfig,
    default_threads,
    get_construction_config,
    get_experiment_config,
    list_all_constructions,
    list_all_experiments,
    resolve_params,
)
from config.command_config import THREADS_ENV
from engine import ArrowingEngine
from graphs import cycle_graph, path_graph
from ramsey_forge.defs.checks import CHECKS
from utils.graph_codec import coloring_to_json


class TestConstructionRegistry:
    def test_every_entry_is_consistent(self):
        for name, config in CONSTRUCTION_CONFIGS.items():
            assert config["name"] == name
            assert set(config["defaults"]) <= set(config["params"])
            assert set(config["params"].values()) <= {"int", "graph", "graphs", "coloring"}

    def test_lookup(self):
        assert get_construction_config("apex_gadget")["group_name"] == "apex"
        assert "weak_to_strong" in list_all_constructions()
        with pytest.raises(ValueError, match="Unknown construction"):
            get_construction_config("nope")

    def test_resolve_fills_defaults_and_loads_graphs(self):
        params = resolve_params("apex_gadget", {"h": "c5", "v": None})
        assert params["v"] == 0
        assert params["h"].same_edges(cycle_graph(5))

    def test_resolve_splits_graph_lists(self):
        params = resolve_params("join_gadget", {"r0": "m2", "components": "c5,c7", "t": "4"})
        assert params["t"] == 4
        assert [g.n for g in params["components"]] == [5, 7]

    def test_resolve_reports_missing_params(self):
        with pytest.raises(PreconditionError, match="needs parameters"):
            resolve_params("h_t_d", {"t": 3})

    def test_resolve_rejects_non_integers(self):
        with pytest.raises(PreconditionError, match="integer"):
            resolve_params("h_t_d", {"t": "three", "d": 2})

    def test_resolve_reads_coloring_over_g(self, tmp_path):
        g = path_graph(4)
        path = tmp_path / "psi.json"
        path.write_text(coloring_to_json(EdgeColoring(g, (Color.RED, Color.BLUE, Color.RED))))
        params = resolve_params("weak_to_strong", {"g": "p4", "psi": str(path), "h": "p3"})
        assert params["psi"].color(1, 2) is Color.BLUE

    @pytest.mark.parametrize(
        "name, raw",
        [
            ("h_t_d", {"t": 3, "d": 2}),
            ("clique_transversal", {"t": 3, "d": 2}),
            ("join_gadget", {"r0": "m2", "components": "c5", "t": 3}),
            ("apex_gadget", {"h": "c5"}),
            ("simplicity_witness", {"h": "c5"}),
            ("chain_senders", {"h": "p3"}),
            ("weak_bel_frame", {"g0": "m2", "g1": "e4", "h": "p3"}),
        ],
    )
    def test_builders(self, name, raw):
        config = get_construction_config(name)
        built = config["builder"](resolve_params(name, raw), ArrowingEngine())
        assert isinstance(built, ColoredConstruction)
        assert (built.psi is not None) == config["colored"]


class TestExperimentRegistry:
    def test_every_experiment_has_a_check(self):
        for name, config in EXPERIMENT_CONFIGS.items():
            assert config["name"] == name
            assert config["check"] in CHECKS
            if config["construction"] is not None:
                assert config["construction"] in CONSTRUCTION_CONFIGS

    def test_lookup(self):
        assert get_experiment_config("sender_chain")["group_name"] == "senders"
        assert len(list_all_experiments()) == len(EXPERIMENT_CONFIGS)
        with pytest.raises(ValueError, match="Unknown experiment"):
            get_experiment_config("nope")


class TestCommandConfig:
    def test_defaults_pass(self):
        config = CommandConfig().check_invariants()
        assert config.format == "json"
        engine = config.to_engine()
        assert engine.threads == 1 and engine.max_nodes is None

    @pytest.mark.parametrize(
        "changes",
        [
            {"format": "png"},
            {"timeout_ms": 0},
            {"max_nodes": -1},
            {"threads": 0},
            {"deterministic": True, "threads": 2},
        ],
    )
    def test_invariants(self, changes):
        with pytest.raises(UsageError):
            CommandConfig(**changes).check_invariants()

    def test_engine_carries_budget(self):
        engine = CommandConfig(max_nodes=10, timeout_ms=50, deterministic=True).to_engine()
        assert (engine.max_nodes, engine.timeout_ms, engine.deterministic) == (10, 50, True)

    def test_threads_from_environment(self, monkeypatch):
        monkeypatch.delenv(THREADS_ENV, raising=False)
        assert default_threads() == 1
        monkeypatch.setenv(THREADS_ENV, "4")
        assert default_threads() == 4
        monkeypatch.setenv(THREADS_ENV, "many")
        with pytest.raises(UsageError):
            default_threads()
