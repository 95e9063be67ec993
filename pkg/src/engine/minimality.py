"""
Ramsey minimality.

Arrowing is monotone: a supergraph of a Ramsey graph is Ramsey. Every proper subgraph of F
either misses an edge (so it lies inside some F - e) or keeps every edge and drops a vertex,
which must then be isolated. Checking isolated vertices and single-edge deletions is therefore
enough.
"""

from typing import Optional

from dagster import get_dagster_logger

from models import Graph, NotArrowingError

from graphs.operations import delete_edge, strip_isolated

from .arrowing import ArrowingEngine, SearchBudget, default_engine

logger = get_dagster_logger("engine.minimality")


def is_ramsey_minimal(
    f: Graph, h: Graph, budget: Optional[SearchBudget] = None, engine: Optional[ArrowingEngine] = None
) -> bool:
    engine = default_engine(engine)
    if f.isolated_vertices():
        return False
    if not engine.arrows(f, h, budget).arrows:
        return False
    for u, v in f.edges:
        if engine.arrows(delete_edge(f, u, v), h, budget).arrows:
            logger.debug(f"F - ({u},{v}) still arrows; not minimal")
            return False
    return True


def extract_minimal_subgraph(
    f: Graph, h: Graph, budget: Optional[SearchBudget] = None, engine: Optional[ArrowingEngine] = None
) -> Graph:
    """
    One pass of edge deletions in lexicographic order, keeping each deletion that still arrows,
    then isolated vertices removed (remaining vertices relabelled in ascending order).

    A single pass suffices: an edge kept because F_t - e does not arrow stays necessary in every
    later F' inside F_t.
    """
    engine = default_engine(engine)
    if not engine.arrows(f, h, budget).arrows:
        raise NotArrowingError(f"input graph (n={f.n}, m={f.num_edges}) does not arrow H")
    current = f
    for u, v in f.edges:
        candidate = delete_edge(current, u, v)
        if engine.arrows(candidate, h, budget).arrows:
            current = candidate
    minimal, _ = strip_isolated(current)
    logger.info(
        f"extracted minimal subgraph: n={minimal.n}, m={minimal.num_edges} "
        f"from n={f.n}, m={f.num_edges}"
    )
    return minimal
