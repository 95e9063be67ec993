"""
Subgraph embedding search (not necessarily induced copies).

Backtracking over H-vertices in a connectivity-first order; candidates for the next
H-vertex are the intersection of the bit-set neighbourhoods of its already-mapped
neighbours, minus used host vertices, filtered by degree.
"""

from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from models import Edge, Embedding, Graph, iter_bits

AdjRows = Sequence[int]

# Automorphism enumeration stops here; callers fall back to "no symmetry" beyond it.
AUTOMORPHISM_LIMIT = 5000


@dataclass(frozen=True)
class Pattern:
    """H compiled into a matching order. `back[i]` lists earlier positions adjacent to order[i]."""

    h: Graph
    order: Tuple[int, ...]
    back: Tuple[Tuple[int, ...], ...]
    degree: Tuple[int, ...]


def compile_pattern(h: Graph, prefix: Sequence[int] = ()) -> Pattern:
    order: List[int] = list(prefix)
    placed = set(order)
    while len(order) < h.n:
        best = None
        best_key = None
        for v in range(h.n):
            if v in placed:
                continue
            linked = sum(1 for w in order if h.adj[v] >> w & 1)
            key = (linked, h.degree(v), -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        order.append(best)
        placed.add(best)
    position = {v: i for i, v in enumerate(order)}
    back = tuple(
        tuple(sorted(position[w] for w in iter_bits(h.adj[v]) if position[w] < i))
        for i, v in enumerate(order)
    )
    return Pattern(h, tuple(order), back, tuple(h.degree(v) for v in order))


class _Matcher:
    """One search over a fixed host adjacency; `assign[i]` is the host image of order[i]."""

    def __init__(self, pattern: Pattern, adj: AdjRows, n: int):
        self.pattern = pattern
        self.adj = adj
        self.full = (1 << n) - 1
        self.k = len(pattern.order)
        self.assign: List[int] = [-1] * self.k

    def _candidates(self, pos: int, used: int) -> int:
        cand = self.full & ~used
        for p in self.pattern.back[pos]:
            cand &= self.adj[self.assign[p]]
        return cand

    def first(self, pos: int, used: int) -> bool:
        if pos == self.k:
            return True
        need = self.pattern.degree[pos]
        adj = self.adj
        for w in iter_bits(self._candidates(pos, used)):
            if adj[w].bit_count() < need:
                continue
            self.assign[pos] = w
            if self.first(pos + 1, used | (1 << w)):
                return True
        self.assign[pos] = -1
        return False

    def every(self, pos: int, used: int) -> Iterator[Tuple[int, ...]]:
        if pos == self.k:
            yield tuple(self.assign)
            return
        need = self.pattern.degree[pos]
        for w in iter_bits(self._candidates(pos, used)):
            if self.adj[w].bit_count() < need:
                continue
            self.assign[pos] = w
            yield from self.every(pos + 1, used | (1 << w))
        self.assign[pos] = -1

    def to_embedding(self, assign: Sequence[int]) -> Embedding:
        mapping = [0] * self.k
        for i, v in enumerate(self.pattern.order):
            mapping[v] = assign[i]
        return Embedding(tuple(mapping))


def embed_in_rows(pattern: Pattern, adj: AdjRows, n: int) -> Optional[Embedding]:
    """First embedding of the pattern into the host given as bit-set rows."""
    if pattern.h.n > n:
        return None
    matcher = _Matcher(pattern, adj, n)
    if matcher.first(0, 0):
        return matcher.to_embedding(matcher.assign)
    return None


def find_embedding(h: Graph, g: Graph) -> Optional[Embedding]:
    """An embedding of h into g if one exists; deterministic (ascending host labels)."""
    if h.n > g.n or h.num_edges > g.num_edges:
        return None
    return embed_in_rows(compile_pattern(h), g.adj, g.n)


def iter_embeddings(h: Graph, g: Graph, limit: Optional[int] = None) -> Iterator[Embedding]:
    if h.n > g.n:
        return
    pattern = compile_pattern(h)
    matcher = _Matcher(pattern, g.adj, g.n)
    for count, assign in enumerate(matcher.every(0, 0)):
        if limit is not None and count >= limit:
            return
        yield matcher.to_embedding(assign)


def automorphisms(g: Graph, limit: int = AUTOMORPHISM_LIMIT) -> Optional[List[Tuple[int, ...]]]:
    """All automorphisms as vertex permutations, or None when there are more than `limit`."""
    found = [e.mapping for e in iter_embeddings(g, g, limit=limit + 1)]
    if len(found) > limit:
        return None
    return found


def oriented_edge_representatives(h: Graph) -> List[Edge]:
    """One oriented edge (x, y) per orbit of Aut(h) acting on oriented edges."""
    oriented = [(u, v) for u, v in h.edges] + [(v, u) for u, v in h.edges]
    auts = automorphisms(h)
    if auts is None:
        return sorted(oriented)
    seen = set()
    reps = []
    for x, y in sorted(oriented):
        if (x, y) in seen:
            continue
        reps.append((x, y))
        for perm in auts:
            seen.add((perm[x], perm[y]))
    return reps


class RootedMatcher:
    """
    Finds copies of H that use a given host edge.

    One compiled pattern per orbit representative of oriented H-edges, with the
    representative's endpoints matched first.
    """

    def __init__(self, h: Graph):
        self.h = h
        self.patterns = [compile_pattern(h, prefix=(x, y)) for x, y in oriented_edge_representatives(h)]

    def through_edge(self, adj: AdjRows, n: int, a: int, b: int) -> Optional[Embedding]:
        """A copy of H in `adj` whose image contains the edge (a, b), which must be present."""
        for pattern in self.patterns:
            if adj[a].bit_count() < pattern.degree[0] or adj[b].bit_count() < pattern.degree[1]:
                continue
            matcher = _Matcher(pattern, adj, n)
            matcher.assign[0] = a
            matcher.assign[1] = b
            if matcher.first(2, (1 << a) | (1 << b)):
                return matcher.to_embedding(matcher.assign)
        return None


def edge_permutations(g: Graph, auts: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    """Each vertex automorphism as a permutation of edge indices."""
    index: Dict[Edge, int] = g.edge_index
    perms = []
    for perm in auts:
        image = []
        for u, v in g.edges:
            a, b = perm[u], perm[v]
            image.append(index[(a, b) if a < b else (b, a)])
        perms.append(tuple(image))
    return perms
