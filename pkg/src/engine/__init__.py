from .arrowing import ArrowingEngine, SearchBudget, arrows, epsilon_arrows, find_coloring
from .gadgets import (
    certify,
    is_signal_sender,
    uncovered_subsets,
    verify_apex_property,
    verify_bel_property,
    verify_epsilon_component,
)
from .minimality import extract_minimal_subgraph, is_ramsey_minimal
from .oracle import enumerate_mono_free, naive_arrows
from .searches import (
    DegreeSearchResult,
    check_lower_bounds,
    clique_apex_degree,
    ramsey_number_desk,
    s_min_degree_witness_search,
)

__all__ = [
    "ArrowingEngine",
    "SearchBudget",
    "arrows",
    "epsilon_arrows",
    "find_coloring",
    "certify",
    "is_signal_sender",
    "uncovered_subsets",
    "verify_apex_property",
    "verify_bel_property",
    "verify_epsilon_component",
    "extract_minimal_subgraph",
    "is_ramsey_minimal",
    "enumerate_mono_free",
    "naive_arrows",
    "DegreeSearchResult",
    "check_lower_bounds",
    "clique_apex_degree",
    "ramsey_number_desk",
    "s_min_degree_witness_search",
]
