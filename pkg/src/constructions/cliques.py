"""
H_{t,d} and the clique-transversal gadget.

Labelling of the gadget: T_i occupies (i-1)*t .. i*t-1; the S_T blocks follow, one block of
t-d vertices per transversal tuple, tuples taken in lexicographic order of their indices.
"""

from itertools import combinations, product
from typing import Dict, Iterable, List, Mapping

from dagster import get_dagster_logger

from models import Color, ColoredConstruction, Edge, EdgeColoring, Graph, PreconditionError

from graphs.operations import add_vertex, build_graph

logger = get_dagster_logger("constructions.cliques")


def make_H_t_d(t: int, d: int) -> Graph:
    """K_t on 0..t-1 plus vertex t joined to 0..d-1."""
    if t < 1:
        raise PreconditionError(f"t must be at least 1, got {t}")
    if not 0 <= d <= t:
        raise PreconditionError(f"d must satisfy 0 <= d <= t, got t={t}, d={d}")
    edges = [(u, v) for u, v in combinations(range(t), 2)]
    edges += [(i, t) for i in range(d)]
    return build_graph(t + 1, edges, {"clique": range(t), "apex": [t]})


def transversal_role(block: Iterable[int]) -> str:
    return "S_T(" + ",".join(str(v) for v in block) + ")"


def make_clique_transversal_gadget(t: int, d: int) -> ColoredConstruction:
    """
    d red copies of K_t, complete blue bipartite graphs between them, and for every transversal
    tuple a blue clique S_T of size t-d joined blue to the tuple.
    """
    if not 2 <= d < t:
        raise PreconditionError(f"clique transversal gadget needs 2 <= d < t, got t={t}, d={d}")
    parts = [list(range(i * t, (i + 1) * t)) for i in range(d)]
    roles: Dict[str, List[int]] = {f"T_{i + 1}": part for i, part in enumerate(parts)}
    colors: Dict[Edge, Color] = {}
    for part in parts:
        for u, v in combinations(part, 2):
            colors[(u, v)] = Color.RED
    for a, b in combinations(parts, 2):
        for u in a:
            for v in b:
                colors[(u, v)] = Color.BLUE
    next_vertex = d * t
    for tuple_indices in product(range(t), repeat=d):
        transversal = [parts[i][j] for i, j in enumerate(tuple_indices)]
        block = list(range(next_vertex, next_vertex + t - d))
        next_vertex += t - d
        roles[transversal_role(transversal)] = block
        for u, v in combinations(block, 2):
            colors[(u, v)] = Color.BLUE
        for s in block:
            for x in transversal:
                colors[(x, s)] = Color.BLUE
    graph = build_graph(next_vertex, list(colors), roles)
    psi = EdgeColoring.from_mapping(graph, colors)
    logger.info(f"clique transversal gadget t={t}, d={d}: n={graph.n}, m={graph.num_edges}")
    return ColoredConstruction(graph, psi, "clique_transversal", {"t": t, "d": d})


def attach_apex(c: ColoredConstruction, picks: Mapping[str, Iterable[int]], degree_per_part: int) -> Graph:
    """c.graph plus an apex vertex joined to `degree_per_part` picked vertices in each named part."""
    chosen: List[int] = []
    for role, vertices in sorted(picks.items()):
        members = c.graph.role(role)
        vertices = sorted(set(vertices))
        if len(vertices) != degree_per_part:
            raise PreconditionError(
                f"pick for {role} has {len(vertices)} vertices, expected {degree_per_part}"
            )
        outside = [v for v in vertices if v not in members]
        if outside:
            raise PreconditionError(f"pick for {role} contains vertices outside the role: {outside}")
        chosen.extend(vertices)
    return add_vertex(c.graph, chosen, role="apex")
