"""
Desk-scale searches: small Ramsey numbers and upper bounds on the minimum degree of minimal graphs.
"""

from typing import Any, Dict, Iterable, NamedTuple, Optional

from dagster import get_dagster_logger

from models import Graph, NoCandidateArrowsError

from graphs.operations import complete_graph

from .arrowing import ArrowingEngine, SearchBudget, default_engine
from .minimality import extract_minimal_subgraph

logger = get_dagster_logger("engine.searches")


class DegreeSearchResult(NamedTuple):
    best: int
    witness: Graph
    candidates_arrowing: int


def ramsey_number_desk(
    h: Graph, n_max: int, budget: Optional[SearchBudget] = None, engine: Optional[ArrowingEngine] = None
) -> Optional[int]:
    """Smallest n <= n_max with K_n -> h, else None."""
    engine = default_engine(engine)
    for n in range(max(h.n, 1), n_max + 1):
        if engine.arrows(complete_graph(n), h, budget).arrows:
            logger.info(f"r(H) = {n} for H(n={h.n}, m={h.num_edges})")
            return n
    logger.info(f"no complete graph up to K_{n_max} arrows H(n={h.n}, m={h.num_edges})")
    return None


def s_min_degree_witness_search(
    h: Graph,
    universe: Iterable[Graph],
    budget: Optional[SearchBudget] = None,
    engine: Optional[ArrowingEngine] = None,
) -> DegreeSearchResult:
    """
    Minimum δ over minimal subgraphs extracted from the candidates that arrow h.
    An upper bound on s(h), never an exact value.
    """
    engine = default_engine(engine)
    best: Optional[DegreeSearchResult] = None
    arrowing = 0
    for f in universe:
        if not engine.arrows(f, h, budget).arrows:
            continue
        arrowing += 1
        minimal = extract_minimal_subgraph(f, h, budget, engine)
        delta = min(minimal.degrees)
        if best is None or delta < best.best:
            best = DegreeSearchResult(delta, minimal, 0)
    if best is None:
        raise NoCandidateArrowsError("no candidate graph arrows H")
    return best._replace(candidates_arrowing=arrowing)


def clique_apex_degree(h: Graph) -> Optional[int]:
    """
    The largest d such that h is K_t plus a vertex of degree d (h ≅ H_{t,d}), else None.
    """
    k = h.n - 1
    degrees = [h.degree(a) for a in range(h.n) if h.num_edges - h.degree(a) == k * (k - 1) // 2]
    return max(degrees) if degrees else None


def check_lower_bounds(minimal: Graph, h: Graph) -> Dict[str, Any]:
    """
    Compare δ of an extracted minimal graph with the known lower bounds on s(h):
    2δ(h) - 1 always, and d^2 when h is a clique plus an apex of degree d.
    """
    delta = min(minimal.degrees) if minimal.n else 0
    bounds = {"trivial": 2 * min(h.degrees) - 1}
    apex = clique_apex_degree(h)
    if apex is not None:
        bounds["clique_apex"] = apex * apex
    return {
        "min_degree": delta,
        "lower_bounds": bounds,
        "consistent": all(delta >= b for b in bounds.values()),
    }
