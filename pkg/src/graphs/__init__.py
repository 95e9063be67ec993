from .canonical import are_isomorphic, canonical_form, canonical_hash
from .embedding import (
    RootedMatcher,
    automorphisms,
    compile_pattern,
    embed_in_rows,
    find_embedding,
    iter_embeddings,
    oriented_edge_representatives,
)
from .operations import (
    add_vertex,
    build_graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    delete_edge,
    delete_vertex_edges,
    disjoint_union,
    edge_subgraph,
    empty_graph,
    induced_subgraph,
    is_connected,
    join_graphs,
    matching_graph,
    path_graph,
    petersen_graph,
    relabel,
    set_distance,
    star_graph,
    strip_isolated,
    to_networkx,
    union_edges,
    with_roles,
)
from .stats import clique_number, contains_clique, find_clique, graph_stats, independence_number, stats_frame

__all__ = [
    "are_isomorphic",
    "canonical_form",
    "canonical_hash",
    "RootedMatcher",
    "automorphisms",
    "compile_pattern",
    "embed_in_rows",
    "find_embedding",
    "iter_embeddings",
    "oriented_edge_representatives",
    "add_vertex",
    "build_graph",
    "complete_bipartite",
    "complete_graph",
    "cycle_graph",
    "delete_edge",
    "delete_vertex_edges",
    "disjoint_union",
    "edge_subgraph",
    "empty_graph",
    "induced_subgraph",
    "is_connected",
    "join_graphs",
    "matching_graph",
    "path_graph",
    "petersen_graph",
    "relabel",
    "set_distance",
    "star_graph",
    "strip_isolated",
    "to_networkx",
    "union_edges",
    "with_roles",
    "clique_number",
    "contains_clique",
    "find_clique",
    "graph_stats",
    "independence_number",
    "stats_frame",
]
