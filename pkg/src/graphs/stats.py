"""
Exact graph statistics. Clique and independence numbers come from a bit-set
branch and bound with a greedy-coloring upper bound; fine at desk scale.
"""

from typing import Iterable, List, Optional, Sequence, Tuple

import pandas as pd

from models import Graph, GraphStats, iter_bits

from .operations import is_connected

STATS_COLUMNS = [
    "name",
    "n",
    "edges",
    "min_degree",
    "max_degree",
    "clique_number",
    "independence_number",
    "is_regular",
    "regular_degree",
    "is_connected",
]


def _color_bound(candidates: int, adj: Sequence[int]) -> int:
    """Number of color classes in a greedy coloring of `candidates`; bounds the clique size."""
    colors = 0
    uncolored = candidates
    while uncolored:
        colors += 1
        available = uncolored
        while available:
            low = available & -available
            v = low.bit_length() - 1
            uncolored &= ~low
            available &= ~low & ~adj[v]
    return colors


def max_clique_in_rows(adj: Sequence[int], n: int) -> int:
    if n == 0:
        return 0
    best = 1

    def expand(size: int, candidates: int) -> None:
        nonlocal best
        if not candidates:
            best = max(best, size)
            return
        if size + _color_bound(candidates, adj) <= best:
            return
        while candidates:
            if size + candidates.bit_count() <= best:
                return
            low = candidates & -candidates
            v = low.bit_length() - 1
            candidates &= ~low
            expand(size + 1, candidates & adj[v])

    expand(0, (1 << n) - 1)
    return best


def clique_number(g: Graph) -> int:
    return max_clique_in_rows(g.adj, g.n)


def complement_rows(g: Graph) -> tuple:
    full = g.vertex_mask
    return tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj))


def independence_number(g: Graph) -> int:
    return max_clique_in_rows(complement_rows(g), g.n)


def find_clique(adj: Sequence[int], n: int, k: int, within: Optional[int] = None) -> Optional[Tuple[int, ...]]:
    """A k-clique inside vertex set `within` (default: everything), vertices ascending, or None."""
    if k <= 0:
        return ()
    chosen: List[int] = []

    def search(candidates: int) -> bool:
        if len(chosen) == k:
            return True
        for v in iter_bits(candidates):
            if len(chosen) + candidates.bit_count() < k:
                return False
            candidates &= ~(1 << v)
            chosen.append(v)
            if search(candidates & adj[v]):
                return True
            chosen.pop()
        return False

    mask = (1 << n) - 1 if within is None else within
    return tuple(chosen) if search(mask) else None


def contains_clique(adj: Sequence[int], n: int, k: int, within: Optional[int] = None) -> bool:
    return find_clique(adj, n, k, within) is not None


def graph_stats(g: Graph) -> GraphStats:
    degrees = g.degrees
    min_degree = min(degrees) if degrees else 0
    max_degree = max(degrees) if degrees else 0
    regular = g.n > 0 and min_degree == max_degree
    return GraphStats(
        n=g.n,
        num_edges=g.num_edges,
        min_degree=min_degree,
        max_degree=max_degree,
        clique_number=clique_number(g),
        independence_number=independence_number(g),
        is_regular=regular,
        regular_degree=min_degree if regular else None,
        is_connected=is_connected(g),
    )


def stats_frame(graphs: Iterable[tuple]) -> pd.DataFrame:
    """DataFrame of GraphStats, one row per (name, graph) pair."""
    rows = []
    for name, g in graphs:
        row = {"name": name}
        row.update(graph_stats(g).to_dict())
        rows.append(row)
    return pd.DataFrame(rows, columns=STATS_COLUMNS)
