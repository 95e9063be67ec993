"""
Desk-scale experiment registry.
Each experiment optionally builds a registered construction and runs one named check against it;
the Dagster project turns every entry into a construct/verify asset pair.
"""

from typing import Dict, List

from config.config_schema import ExperimentConfig


# ============================================================================
# CLIQUES
# ============================================================================

CLIQUE_EXPERIMENT_CONFIGS: Dict[str, ExperimentConfig] = {
    "ramsey_numbers": {
        "name": "ramsey_numbers",
        "description": "Smallest complete graph arrowing each target",
        "construction": None,
        "params": {"targets": ["p3", "k3", "s3"], "n_max": 7},
        "check": "ramsey_numbers",
        "columns": ["target", "n_max", "ramsey_number", "status"],
        "group_name": "cliques",
    },
    "s_upper_bounds": {
        "name": "s_upper_bounds",
        "description": "Minimum degree of minimal graphs extracted from arrowing candidates",
        "construction": None,
        "params": {
            "cases": [
                {"h": "k3", "candidates": ["k6"]},
                {"h": "p3", "candidates": ["k3", "s3"]},
            ]
        },
        "check": "s_upper_bounds",
        "columns": ["target", "candidates", "candidates_arrowing", "min_degree", "status", "consistent"],
        "group_name": "cliques",
    },
    "clique_transversal_apex": {
        "name": "clique_transversal_apex",
        "description": "Every apex attachment and apex coloring of the (3,2) gadget yields a monochromatic H_{3,2}",
        "construction": "clique_transversal",
        "params": {"t": 3, "d": 2},
        "check": "apex_attachments",
        "columns": ["picks", "colorings", "red_copies", "blue_copies", "all_monochromatic"],
        "group_name": "cliques",
    },
    "join_gadget": {
        "name": "join_gadget",
        "description": "Join gadget coloring has no red H_{t,2} and no blue K_t",
        "construction": "join_gadget",
        "params": {"t": 3, "r0": "m2", "components": ["c5"]},
        "check": "join_coloring",
        "columns": ["n", "edges", "red_edges", "red_h_t_2", "blue_k_t"],
        "group_name": "cliques",
    },
}


# ============================================================================
# APEX
# ============================================================================

APEX_EXPERIMENT_CONFIGS: Dict[str, ExperimentConfig] = {
    "apex_gadget_c5": {
        "name": "apex_gadget_c5",
        "description": "Apex gadget for C_5: each d-subset is covered, and only by its own copy",
        "construction": "apex_gadget",
        "params": {"h": "c5", "v": 0},
        "check": "apex_property",
        "columns": ["copy", "covered", "holds_without_copy"],
        "group_name": "apex",
    },
    "simplicity_witness_c5": {
        "name": "simplicity_witness_c5",
        "description": "Every coloring of the apex edges closes a monochromatic C_5 through the apex",
        "construction": "simplicity_witness",
        "params": {"h": "c5", "v": 0},
        "check": "apex_pigeonhole",
        "columns": ["apex_colors", "mono_color", "through_apex"],
        "group_name": "apex",
    },
}


# ============================================================================
# SENDERS
# ============================================================================

SENDER_EXPERIMENT_CONFIGS: Dict[str, ExperimentConfig] = {
    "sender_chain": {
        "name": "sender_chain",
        "description": "Two chained P_4 senders for P_3 still form a signal sender",
        "construction": "chain_senders",
        "params": {"h": "p3", "length": 4, "count": 2},
        "check": "signal_sender",
        "columns": ["n", "edges", "e_f_distance", "is_sender"],
        "group_name": "senders",
    },
}


# ============================================================================
# FULL REGISTRY
# ============================================================================

EXPERIMENT_CONFIGS: Dict[str, ExperimentConfig] = {
    **CLIQUE_EXPERIMENT_CONFIGS,
    **APEX_EXPERIMENT_CONFIGS,
    **SENDER_EXPERIMENT_CONFIGS,
}


def get_experiment_config(name: str) -> ExperimentConfig:
    """Retrieve experiment config by id."""
    if name not in EXPERIMENT_CONFIGS:
        raise ValueError(f"Unknown experiment: {name}")
    return EXPERIMENT_CONFIGS[name]


def list_all_experiments() -> List[str]:
    """List all configured experiments."""
    return list(EXPERIMENT_CONFIGS.keys())
