"""
Extending a coloring of F - v to F.

Both procedures take the base coloring on F with v's edges removed and the original labels
kept (v stays as an isolated slot), and color only the edges at v.
"""

from itertools import combinations
from typing import Dict, List, Tuple

from dagster import get_dagster_logger

from models import Color, ColoringError, Edge, EdgeColoring, Graph, PreconditionError, mask_of

from graphs.operations import delete_vertex_edges

logger = get_dagster_logger("coloring.extensions")


def _check_base(f: Graph, v: int, base: EdgeColoring) -> None:
    if not 0 <= v < f.n:
        raise PreconditionError(f"vertex {v} outside 0..{f.n - 1}")
    if not base.host.same_edges(delete_vertex_edges(f, v)):
        raise ColoringError(f"base coloring must color exactly the edges of F - {v} (same labels)")


def extend_split(f: Graph, v: int, base: EdgeColoring, delta: int) -> EdgeColoring:
    """
    Split N(v) into R(v) (lowest labels, at most delta-1 of them) and B(v) (the rest);
    edges to R(v) are red and edges to B(v) blue.
    """
    _check_base(f, v, base)
    degree = f.degree(v)
    if degree > 2 * delta - 2:
        raise PreconditionError(f"deg(v)={degree} exceeds 2*delta-2={2 * delta - 2}")
    neighbors = f.neighbors(v)
    cut = min(delta - 1, degree)
    extra: Dict[Edge, Color] = {}
    for w in neighbors[:cut]:
        extra[(v, w)] = Color.RED
    for w in neighbors[cut:]:
        extra[(v, w)] = Color.BLUE
    return base.extended(f, extra)


def red_clique_packing(base: EdgeColoring, s: List[int], d: int) -> List[Tuple[int, ...]]:
    """Greedy maximal family of vertex-disjoint red K_d's inside s, scanned in lexicographic order."""
    red = base.class_adj(Color.RED)
    used = 0
    packing = []
    for group in combinations(sorted(s), d):
        if used & mask_of(group):
            continue
        if all(red[a] >> b & 1 for a, b in combinations(group, 2)):
            packing.append(group)
            used |= mask_of(group)
    return packing


def extend_packing(f: Graph, v: int, base: EdgeColoring, d: int) -> EdgeColoring:
    """
    Color v's edges into a maximal red K_d packing of N(v) blue and every other edge at v red.

    With deg(v) < d^2 the packing has at most d-1 cliques, so v's blue neighbourhood has no
    blue K_d and its red neighbourhood has no red K_d.
    """
    _check_base(f, v, base)
    if d < 1:
        raise PreconditionError(f"clique order d must be at least 1, got {d}")
    degree = f.degree(v)
    if degree >= d * d:
        raise PreconditionError(f"deg(v)={degree} is not below d^2={d * d}")
    neighbors = f.neighbors(v)
    packing = red_clique_packing(base, neighbors, d)
    packed = {w for group in packing for w in group}
    logger.debug(f"packing at v={v}: {len(packing)} red K_{d} over {len(neighbors)} neighbours")
    extra = {(v, w): Color.BLUE if w in packed else Color.RED for w in neighbors}
    return base.extended(f, extra)
