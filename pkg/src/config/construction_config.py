"""
Construction registry.
Every construction the CLI and the experiment pipeline can build, with its parameter kinds.

Parameter kinds: "int", "graph" (path or named token), "graphs" (comma-separated list of
graphs), "coloring" (JSON coloring file over the "g" parameter).
"""

from typing import Any, Dict, List

from models import Color, ColoredConstruction, EdgeColoring, PreconditionError

from config.config_schema import ConstructionConfig
from constructions import (
    chain_senders,
    make_apex_gadget,
    make_clique_transversal_gadget,
    make_H_t_d,
    make_join_gadget,
    make_path_sender,
    make_simplicity_witness,
    make_weak_bel_frame,
    weak_to_strong_frame,
)
from engine import ArrowingEngine, certify
from graphs.operations import union_edges


def _h_t_d(params: Dict[str, Any], engine: ArrowingEngine) -> ColoredConstruction:
    return ColoredConstruction(make_H_t_d(params["t"], params["d"]), None, "h_t_d", {"t": params["t"], "d": params["d"]})


def _clique_transversal(params: Dict[str, Any], engine: ArrowingEngine) -> ColoredConstruction:
    return make_clique_transversal_gadget(params["t"], params["d"])


def _join_gadget(params: Dict[str, Any], engine: ArrowingEngine) -> ColoredConstruction:
    return make_join_gadget(params["r0"], params["components"], params["t"])


def _apex_gadget(params: Dict[str, Any], engine: ArrowingEngine) -> ColoredConstruction:
    return make_apex_gadget(params["h"], params["v"])


def _simplicity_witness(params: Dict[str, Any], engine: ArrowingEngine) -> ColoredConstruction:
    return make_simplicity_witness(params["h"], params["v"])


def build_sender_chain(params: Dict[str, Any]):
    """`count` path senders on `length` vertices, chained left to right (unverified)."""
    if params["count"] < 1:
        raise PreconditionError(f"count must be at least 1, got {params['count']}")
    cert = make_path_sender(params["length"], params["h"])
    for _ in range(params["count"] - 1):
        cert = chain_senders(cert, make_path_sender(params["length"], params["h"]))
    return cert


def _chain_senders(params: Dict[str, Any], engine: ArrowingEngine) -> ColoredConstruction:
    cert = build_sender_chain(params)
    return ColoredConstruction(
        cert.graph, None, "chain_senders", {"length": params["length"], "count": params["count"]}
    )


def _weak_bel_frame(params: Dict[str, Any], engine: ArrowingEngine) -> ColoredConstruction:
    sender = certify(make_path_sender(params["sender_length"], params["h"]), engine=engine)
    if not sender.verified:
        raise PreconditionError(f"path on {params['sender_length']} vertices is not a signal sender for H")
    return make_weak_bel_frame(params["g0"], params["g1"], sender)


def _weak_to_strong(params: Dict[str, Any], engine: ArrowingEngine) -> ColoredConstruction:
    """G_0 and G_1 returned together: G_0's edges red, G_1's edges blue, as the weak frame colors them."""
    g0, g1 = weak_to_strong_frame(params["g"], params["psi"], params["h"])
    graph = union_edges(g0, g1)
    colors = {e: Color.RED for e in g0.edges}
    colors.update({e: Color.BLUE for e in g1.edges})
    return ColoredConstruction(graph, EdgeColoring.from_mapping(graph, colors), "weak_to_strong", {})


# ============================================================================
# REGISTRY
# ============================================================================

CONSTRUCTION_CONFIGS: Dict[str, ConstructionConfig] = {
    "h_t_d": {
        "name": "h_t_d",
        "description": "K_t plus one vertex of degree d",
        "params": {"t": "int", "d": "int"},
        "defaults": {},
        "builder": _h_t_d,
        "colored": False,
        "group_name": "cliques",
    },
    "clique_transversal": {
        "name": "clique_transversal",
        "description": "d red K_t's, blue bipartite joins and blue S_T cliques on every transversal",
        "params": {"t": "int", "d": "int"},
        "defaults": {},
        "builder": _clique_transversal,
        "colored": True,
        "group_name": "cliques",
    },
    "join_gadget": {
        "name": "join_gadget",
        "description": "join of F_1..F_{t-2} and R_0, red inside parts and blue across",
        "params": {"r0": "graph", "components": "graphs", "t": "int"},
        "defaults": {},
        "builder": _join_gadget,
        "colored": True,
        "group_name": "cliques",
    },
    "apex_gadget": {
        "name": "apex_gadget",
        "description": "independent set S of size 2d-1 with H - v glued onto every d-subset",
        "params": {"h": "graph", "v": "int"},
        "defaults": {"v": 0},
        "builder": _apex_gadget,
        "colored": False,
        "group_name": "apex",
    },
    "simplicity_witness": {
        "name": "simplicity_witness",
        "description": "two apex gadgets sharing S, one red and one blue, with an apex of degree 2d-1",
        "params": {"h": "graph", "v": "int"},
        "defaults": {"v": 0},
        "builder": _simplicity_witness,
        "colored": True,
        "group_name": "apex",
    },
    "chain_senders": {
        "name": "chain_senders",
        "description": "path signal senders chained end edge to end edge",
        "params": {"h": "graph", "length": "int", "count": "int"},
        "defaults": {"length": 4, "count": 2},
        "builder": _chain_senders,
        "colored": False,
        "group_name": "senders",
    },
    "weak_bel_frame": {
        "name": "weak_bel_frame",
        "description": "G_0 and G_1 tied to fresh edges e_0, e_1 by one sender copy per edge",
        "params": {"g0": "graph", "g1": "graph", "h": "graph", "sender_length": "int"},
        "defaults": {"sender_length": 6},
        "builder": _weak_bel_frame,
        "colored": True,
        "group_name": "senders",
    },
    "weak_to_strong": {
        "name": "weak_to_strong",
        "description": "G_0/G_1 pair carrying H minus one edge and the missing edge on a fresh set S",
        "params": {"g": "graph", "psi": "coloring", "h": "graph"},
        "defaults": {},
        "builder": _weak_to_strong,
        "colored": True,
        "group_name": "senders",
    },
}


def get_construction_config(name: str) -> ConstructionConfig:
    """Retrieve construction config by id."""
    if name not in CONSTRUCTION_CONFIGS:
        raise ValueError(f"Unknown construction: {name}")
    return CONSTRUCTION_CONFIGS[name]


def list_all_constructions() -> List[str]:
    """List all registered construction ids."""
    return list(CONSTRUCTION_CONFIGS.keys())


def resolve_params(name: str, raw: Dict[str, Any]) -> Dict[str, Any]:
    """Turn raw values (ints, graph tokens or paths, coloring paths) into builder arguments."""
    from utils.graph_codec import read_coloring
    from utils.named_graphs import load_graph

    config = get_construction_config(name)
    merged = {**config["defaults"], **{k: v for k, v in raw.items() if v is not None}}
    missing = [p for p in config["params"] if p not in merged]
    if missing:
        raise PreconditionError(f"construction {name} needs parameters {missing}")
    resolved: Dict[str, Any] = {}
    # colorings are read last: they need their host graph
    for param, kind in sorted(config["params"].items(), key=lambda item: item[1] == "coloring"):
        value = merged[param]
        if kind == "int":
            try:
                resolved[param] = int(value)
            except (TypeError, ValueError) as e:
                raise PreconditionError(f"parameter {param} of {name} must be an integer, got {value!r}") from e
        elif kind == "graph":
            resolved[param] = load_graph(value) if isinstance(value, str) else value
        elif kind == "graphs":
            items = value.split(",") if isinstance(value, str) else value
            resolved[param] = [load_graph(x) if isinstance(x, str) else x for x in items]
        elif kind == "coloring":
            resolved[param] = read_coloring(value, resolved["g"])
    return resolved
