# models/graph.py
"""
Finite simple undirected graph with role-tagged vertex subsets.

Vertices are the dense integers 0..n-1. Adjacency is one int bit set per vertex,
so neighbourhood intersection is a single `&`.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterator, List, Mapping, Optional, Tuple

from .errors import GraphError

Edge = Tuple[int, int]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of `mask` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, eq=False)
class Graph:
    n: int
    adj: Tuple[int, ...]
    roles: Mapping[str, FrozenSet[int]] = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        if len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for w in iter_bits(row):
                if not self.adj[w] >> v & 1:
                    raise GraphError(f"adjacency not symmetric at ({v},{w})")
        frozen_roles: Dict[str, FrozenSet[int]] = {}
        for name, members in self.roles.items():
            members = frozenset(members)
            for v in members:
                if not 0 <= v < self.n:
                    raise GraphError(f"role {name!r} lists vertex {v} outside 0..{self.n - 1}")
            frozen_roles[name] = members
        object.__setattr__(self, "roles", dict(sorted(frozen_roles.items())))

    # ------------------------------------------------------------------ #
    # Edges and degrees
    # ------------------------------------------------------------------ #
    @cached_property
    def edges(self) -> Tuple[Edge, ...]:
        """Edges (u, v) with u < v in lexicographic order."""
        out: List[Edge] = []
        for u, row in enumerate(self.adj):
            for v in iter_bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return tuple(out)

    @cached_property
    def edge_index(self) -> Dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def neighbors(self, v: int) -> List[int]:
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool(self.adj[u] >> v & 1)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def role(self, name: str) -> FrozenSet[int]:
        if name not in self.roles:
            raise GraphError(f"unknown role {name!r}; known roles: {sorted(self.roles)}")
        return self.roles[name]

    def isolated_vertices(self) -> List[int]:
        return [v for v in range(self.n) if not self.adj[v]]

    # ------------------------------------------------------------------ #
    # Identity
    # ------------------------------------------------------------------ #
    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj and dict(self.roles) == dict(other.roles)

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def same_edges(self, other: "Graph") -> bool:
        """Labelled equality ignoring roles."""
        return self.n == other.n and self.adj == other.adj

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges}, roles={sorted(self.roles)})"


@dataclass(frozen=True)
class Embedding:
    """Injective, edge-preserving map V(H) -> V(G); `mapping[i]` is the image of H-vertex i."""

    mapping: Tuple[int, ...]

    def __getitem__(self, v: int) -> int:
        return self.mapping[v]

    def __len__(self) -> int:
        return len(self.mapping)

    def image(self) -> FrozenSet[int]:
        return frozenset(self.mapping)

    def image_edges(self, h: Graph) -> List[Edge]:
        return [norm_edge(self.mapping[u], self.mapping[v]) for u, v in h.edges]

    def is_valid(self, h: Graph, g: Graph) -> bool:
        if len(self.mapping) != h.n or len(set(self.mapping)) != h.n:
            return False
        if any(not 0 <= x < g.n for x in self.mapping):
            return False
        return all(g.has_edge(self.mapping[u], self.mapping[v]) for u, v in h.edges)

    def to_dict(self) -> Dict[str, List[int]]:
        return {"map": list(self.mapping)}


@dataclass(frozen=True)
class GraphStats:
    n: int
    num_edges: int
    min_degree: int
    max_degree: int
    clique_number: int
    independence_number: int
    is_regular: bool
    regular_degree: Optional[int]
    is_connected: bool

    def to_dict(self) -> Dict[str, object]:
        return {
            "n": self.n,
            "edges": self.num_edges,
            "min_degree": self.min_degree,
            "max_degree": self.max_degree,
            "clique_number": self.clique_number,
            "independence_number": self.independence_number,
            "is_regular": self.is_regular,
            "regular_degree": self.regular_degree,
            "is_connected": self.is_connected,
        }
