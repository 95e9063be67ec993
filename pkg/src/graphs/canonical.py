"""
Canonical labelling by individualisation and refinement.

Leaves of the search tree are discrete ordered partitions; the canonical form is the
lexicographically smallest relabelled adjacency over all leaves. Automorphisms discovered
from equal leaves prune the tree.
"""

import hashlib
from typing import Dict, List, Optional, Sequence, Tuple

from models import Graph, mask_of

from .operations import relabel

Cells = List[List[int]]
Certificate = Tuple[int, ...]


def refine(adj: Sequence[int], cells: Cells) -> Cells:
    """Coarsest equitable refinement; new cells are ordered by neighbour count, so it is label-equivariant."""
    cells = [list(c) for c in cells]
    while True:
        split = False
        for splitter in cells:
            splitter_mask = mask_of(splitter)
            refined: Cells = []
            for cell in cells:
                if len(cell) == 1:
                    refined.append(cell)
                    continue
                groups: Dict[int, List[int]] = {}
                for v in cell:
                    groups.setdefault((adj[v] & splitter_mask).bit_count(), []).append(v)
                if len(groups) > 1:
                    split = True
                refined.extend(groups[k] for k in sorted(groups))
            if split:
                cells = refined
                break
        if not split:
            return cells


def _individualise(cells: Cells, index: int, v: int) -> Cells:
    rest = [w for w in cells[index] if w != v]
    return cells[:index] + [[v], rest] + cells[index + 1 :]


def _target_cell(cells: Cells) -> Optional[int]:
    best = None
    for i, cell in enumerate(cells):
        if len(cell) > 1 and (best is None or len(cell) < len(cells[best])):
            best = i
    return best


def _certificate(adj: Sequence[int], order: Sequence[int]) -> Certificate:
    position = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        row = 0
        r = adj[v]
        while r:
            low = r & -r
            row |= 1 << position[low.bit_length() - 1]
            r ^= low
        rows.append(row)
    return tuple(rows)


class _Search:
    def __init__(self, g: Graph):
        self.adj = g.adj
        self.n = g.n
        self.first_path: Optional[List[int]] = None
        self.first_order: Optional[List[int]] = None
        self.first_cert: Optional[Certificate] = None
        self.best_cert: Optional[Certificate] = None
        self.best_order: Optional[List[int]] = None
        self.automorphisms: List[Tuple[int, ...]] = []

    def run(self) -> List[int]:
        self._visit(refine(self.adj, [list(range(self.n))]), [])
        return self.best_order

    def _orbit_roots(self, prefix: Sequence[int]) -> Dict[int, int]:
        """Union-find parents over vertices for automorphisms fixing `prefix` pointwise."""
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for perm in self.automorphisms:
            if any(perm[p] != p for p in prefix):
                continue
            for x in range(self.n):
                a, b = find(x), find(perm[x])
                if a != b:
                    parent[max(a, b)] = min(a, b)
        return {x: find(x) for x in range(self.n)}

    def _visit(self, cells: Cells, path: List[int]) -> Optional[int]:
        """Explore a node. Returns a depth to unwind to when an automorphism makes the rest redundant."""
        target = _target_cell(cells)
        if target is None:
            cert = self._leaf([c[0] for c in cells], path)
            return self._jump_depth(path, cert)
        explored_roots = set()
        for v in sorted(cells[target]):
            if explored_roots:
                roots = self._orbit_roots(path)
                if roots[v] in {roots[w] for w in explored_roots}:
                    continue
            explored_roots.add(v)
            child = refine(self.adj, _individualise(cells, target, v))
            jump = self._visit(child, path + [v])
            if jump is not None and jump < len(path):
                return jump
        return None

    def _leaf(self, order: List[int], path: List[int]) -> Certificate:
        cert = _certificate(self.adj, order)
        if self.first_cert is None:
            self.first_path, self.first_order, self.first_cert = list(path), order, cert
        elif cert == self.first_cert:
            self._record(self.first_order, order)
        if self.best_cert is None or cert < self.best_cert:
            self.best_cert, self.best_order = cert, order
        elif cert == self.best_cert and self.best_order is not order:
            self._record(self.best_order, order)
        return cert

    def _record(self, source: Sequence[int], target: Sequence[int]) -> None:
        perm = [0] * self.n
        for a, b in zip(source, target):
            perm[a] = b
        perm = tuple(perm)
        if perm != tuple(range(self.n)) and perm not in self.automorphisms:
            self.automorphisms.append(perm)

    def _jump_depth(self, path: List[int], cert: Certificate) -> Optional[int]:
        """If this leaf matches the first leaf, the subtree below the divergence point is redundant."""
        if path == self.first_path or cert != self.first_cert:
            return None
        for depth, (a, b) in enumerate(zip(path, self.first_path)):
            if a != b:
                return depth
        return None


def canonical_order(g: Graph) -> List[int]:
    """Vertices listed in canonical position order."""
    if g.n == 0:
        return []
    return _Search(g).run()


def canonical_form(g: Graph) -> Tuple[Graph, Tuple[int, ...]]:
    """Canonically relabelled copy of g (roles dropped) and the map old label -> canonical label."""
    order = canonical_order(g)
    perm = [0] * g.n
    for position, v in enumerate(order):
        perm[v] = position
    bare = Graph(g.n, g.adj)
    return relabel(bare, perm), tuple(perm)


def canonical_hash(g: Graph) -> str:
    """sha256 hex digest of the canonical form; equal exactly for isomorphic graphs."""
    form, _ = canonical_form(g)
    payload = f"{form.n};" + ",".join(f"{u}-{v}" for u, v in form.edges)
    return hashlib.sha256(payload.encode("ascii")).hexdigest()


def are_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.num_edges != b.num_edges or sorted(a.degrees) != sorted(b.degrees):
        return False
    return canonical_form(a)[0].same_edges(canonical_form(b)[0])
