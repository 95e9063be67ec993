from typing import Dict, List, Sequence

from dagster import get_dagster_logger

from models import Color, ColoredConstruction, Edge, EdgeColoring, Graph, PreconditionError

from graphs.embedding import find_embedding
from graphs.operations import join_graphs
from graphs.stats import clique_number

from .cliques import make_H_t_d

logger = get_dagster_logger("constructions.join_gadget")


def make_join_gadget(r0: Graph, components: Sequence[Graph], t: int) -> ColoredConstruction:
    """
    Join F_1, ..., F_{t-2}, R_0 (in that order); psi is red inside each part and blue across parts.
    """
    if t < 2:
        raise PreconditionError(f"t must be at least 2, got {t}")
    if len(components) != t - 2:
        raise PreconditionError(f"expected t-2={t - 2} components, got {len(components)}")
    if find_embedding(make_H_t_d(t, 2), r0) is not None:
        raise PreconditionError(f"R_0 contains H_{{{t},2}}")
    for i, component in enumerate(components, start=1):
        if component.n and clique_number(component) >= t:
            raise PreconditionError(f"component F_{i} contains K_{t}")
    parts = list(components) + [r0]
    names = [f"F_{i}" for i in range(1, t - 1)] + ["R_0"]
    joined = join_graphs(parts)
    roles: Dict[str, List[int]] = {}
    for i, name in enumerate(names):
        prefix = f"part_{i}"
        for role, members in joined.roles.items():
            if role == prefix:
                roles[name] = sorted(members)
            elif role.startswith(prefix + "."):
                roles[name + role[len(prefix) :]] = sorted(members)
    graph = Graph(joined.n, joined.adj, roles)
    owner = {v: name for name in names for v in roles[name]}
    colors: Dict[Edge, Color] = {
        (u, v): Color.RED if owner[u] == owner[v] else Color.BLUE for u, v in graph.edges
    }
    psi = EdgeColoring.from_mapping(graph, colors)
    logger.info(f"join gadget t={t}: n={graph.n}, m={graph.num_edges}, red={len(psi.edges_of(Color.RED))}")
    return ColoredConstruction(graph, psi, "join_gadget", {"t": t, "parts": len(parts)})
