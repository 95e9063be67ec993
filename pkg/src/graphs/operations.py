"""
Graph construction primitives.
Every operation is a pure function returning a new Graph; roles are carried along.
"""

from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

import networkx as nx

from models import Edge, Graph, GraphError, iter_bits, mask_of, norm_edge

RoleMap = Mapping[str, Iterable[int]]


def build_graph(n: int, edges: Iterable[Sequence[int]], roles: Optional[RoleMap] = None) -> Graph:
    """
    Build a graph on vertices 0..n-1 from a list of vertex pairs.

    Duplicate pairs collapse; roles are stored verbatim.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    rows = [0] * n
    for pair in edges:
        if len(pair) != 2:
            raise GraphError(f"edge {pair!r} is not a vertex pair")
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop ({u},{u}) is not allowed in a simple graph")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows), {name: frozenset(vs) for name, vs in (roles or {}).items()})


def with_roles(g: Graph, roles: RoleMap, keep_existing: bool = True) -> Graph:
    merged: Dict[str, Iterable[int]] = dict(g.roles) if keep_existing else {}
    merged.update(roles)
    return Graph(g.n, g.adj, {k: frozenset(v) for k, v in merged.items()})


def disjoint_union(parts: Sequence[Graph]) -> Tuple[Graph, List[int]]:
    """Disjoint union; returns the union and each part's vertex offset. Roles namespaced `part_i.`."""
    rows: List[int] = []
    roles: Dict[str, Set[int]] = {}
    offsets: List[int] = []
    offset = 0
    for i, part in enumerate(parts):
        offsets.append(offset)
        rows.extend(row << offset for row in part.adj)
        roles[f"part_{i}"] = set(range(offset, offset + part.n))
        for name, members in part.roles.items():
            roles[f"part_{i}.{name}"] = {v + offset for v in members}
        offset += part.n
    return Graph(offset, tuple(rows), roles), offsets


def join_graphs(parts: Sequence[Graph]) -> Graph:
    """Disjoint union plus a complete bipartite graph between every pair of distinct parts."""
    if not parts:
        raise GraphError("join needs at least one part")
    union, offsets = disjoint_union(parts)
    masks = [mask_of(range(off, off + p.n)) for off, p in zip(offsets, parts)]
    total = union.vertex_mask
    rows = list(union.adj)
    for mask in masks:
        outside = total & ~mask
        for v in iter_bits(mask):
            rows[v] |= outside
    return Graph(union.n, tuple(rows), dict(union.roles))


def induced_subgraph(g: Graph, s: Iterable[int]) -> Tuple[Graph, Tuple[int, ...]]:
    """
    Subgraph induced by `s`, relabelled 0..|s|-1 in ascending order of the original labels.

    Returns the subgraph and `mapping` with mapping[new] = old.
    """
    keep = sorted(set(s))
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
    position = {old: new for new, old in enumerate(keep)}
    keep_mask = mask_of(keep)
    rows = []
    for old in keep:
        row = 0
        for w in iter_bits(g.adj[old] & keep_mask):
            row |= 1 << position[w]
        rows.append(row)
    roles = {}
    for name, members in g.roles.items():
        roles[name] = {position[v] for v in members if v in position}
    return Graph(len(keep), tuple(rows), roles), tuple(keep)


def edge_subgraph(g: Graph, edges: Iterable[Edge], keep_roles: bool = True) -> Graph:
    """Spanning subgraph (same labels) containing only `edges`, each of which must be in g."""
    chosen = []
    for u, v in edges:
        if not g.has_edge(u, v):
            raise GraphError(f"({u},{v}) is not an edge of the graph")
        chosen.append((u, v))
    return build_graph(g.n, chosen, g.roles if keep_roles else None)


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise GraphError(f"({u},{v}) is not an edge of the graph")
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows), dict(g.roles))


def delete_vertex_edges(g: Graph, v: int) -> Graph:
    """F - v with original labels kept: v stays as an isolated slot."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
    rows = list(g.adj)
    for w in iter_bits(rows[v]):
        rows[w] &= ~(1 << v)
    rows[v] = 0
    return Graph(g.n, tuple(rows), dict(g.roles))


def add_vertex(g: Graph, neighbors: Iterable[int], role: Optional[str] = None) -> Graph:
    """Append vertex n joined to `neighbors`."""
    new = g.n
    rows = list(g.adj) + [0]
    for w in set(neighbors):
        if not 0 <= w < g.n:
            raise GraphError(f"vertex {w} outside 0..{g.n - 1}")
        rows[w] |= 1 << new
        rows[new] |= 1 << w
    roles = dict(g.roles)
    if role is not None:
        roles[role] = frozenset({new})
    return Graph(g.n + 1, tuple(rows), roles)


def strip_isolated(g: Graph) -> Tuple[Graph, Tuple[int, ...]]:
    return induced_subgraph(g, [v for v in range(g.n) if g.adj[v]])


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex v renamed perm[v]."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("relabelling must be a permutation of 0..n-1")
    edges = [(perm[u], perm[v]) for u, v in g.edges]
    roles = {name: {perm[v] for v in members} for name, members in g.roles.items()}
    return build_graph(g.n, edges, roles)


def union_edges(a: Graph, b: Graph) -> Graph:
    """Edge-union of two graphs on the same labels (a's roles win on clashes)."""
    n = max(a.n, b.n)
    roles = dict(b.roles)
    roles.update(a.roles)
    return build_graph(n, list(a.edges) + list(b.edges), roles)


# ============================================================================
# Connectivity helpers (networkx)
# ============================================================================


def to_networkx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges)
    return out


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return nx.is_connected(to_networkx(g))


def set_distance(g: Graph, a: Iterable[int], b: Iterable[int]) -> Optional[int]:
    """Length of a shortest path from any vertex of `a` to any vertex of `b` (None if unreachable)."""
    a, b = set(a), set(b)
    if a & b:
        return 0
    lengths = nx.multi_source_dijkstra_path_length(to_networkx(g), a)
    hits = [lengths[v] for v in b if v in lengths]
    return min(hits) if hits else None


# ============================================================================
# Named families
# ============================================================================


def empty_graph(n: int) -> Graph:
    return build_graph(n, [])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    """Path on n vertices (n-1 edges)."""
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(k: int) -> Graph:
    """K_{1,k} with centre 0."""
    return build_graph(k + 1, [(0, i) for i in range(1, k + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(
        a + b,
        [(u, a + v) for u in range(a) for v in range(b)],
        {"left": range(a), "right": range(a, a + b)},
    )


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def matching_graph(k: int) -> Graph:
    """k disjoint edges (k K_2)."""
    return build_graph(2 * k, [(2 * i, 2 * i + 1) for i in range(k)])


def norm_edges(edges: Iterable[Sequence[int]]) -> List[Edge]:
    return sorted({norm_edge(int(u), int(v)) for u, v in edges})
