# models/coloring.py
import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Tuple

from .errors import ColoringError
from .graph import Edge, Graph, norm_edge


class Color(enum.Enum):
    RED = "R"
    BLUE = "B"

    @property
    def other(self) -> "Color":
        return Color.BLUE if self is Color.RED else Color.RED


@dataclass(frozen=True, eq=False)
class EdgeColoring:
    """Total red/blue assignment over `host.edges`; `colors[i]` colors `host.edges[i]`."""

    host: Graph
    colors: Tuple[Color, ...]

    def __post_init__(self):
        if len(self.colors) != self.host.num_edges:
            raise ColoringError(
                f"coloring has {len(self.colors)} entries for {self.host.num_edges} host edges"
            )

    @classmethod
    def from_mapping(cls, host: Graph, assignment: Mapping[Edge, Color]) -> "EdgeColoring":
        normalized = {norm_edge(u, v): c for (u, v), c in assignment.items()}
        extra = set(normalized) - set(host.edges)
        if extra:
            raise ColoringError(f"coloring assigns non-edges of the host: {sorted(extra)[:5]}")
        missing = [e for e in host.edges if e not in normalized]
        if missing:
            raise ColoringError(f"coloring misses host edges: {missing[:5]}")
        return cls(host, tuple(normalized[e] for e in host.edges))

    @classmethod
    def uniform(cls, host: Graph, color: Color) -> "EdgeColoring":
        return cls(host, (color,) * host.num_edges)

    def color(self, u: int, v: int) -> Color:
        e = norm_edge(u, v)
        if e not in self.host.edge_index:
            raise ColoringError(f"({u},{v}) is not an edge of the host")
        return self.colors[self.host.edge_index[e]]

    def as_mapping(self) -> Dict[Edge, Color]:
        return dict(zip(self.host.edges, self.colors))

    def edges_of(self, color: Color) -> List[Edge]:
        return [e for e, c in zip(self.host.edges, self.colors) if c is color]

    @cached_property
    def _class_adj(self) -> Dict[Color, Tuple[int, ...]]:
        rows = {Color.RED: [0] * self.host.n, Color.BLUE: [0] * self.host.n}
        for (u, v), c in zip(self.host.edges, self.colors):
            rows[c][u] |= 1 << v
            rows[c][v] |= 1 << u
        return {c: tuple(r) for c, r in rows.items()}

    def class_adj(self, color: Color) -> Tuple[int, ...]:
        """Bit-set adjacency of one color class, same labels as the host."""
        return self._class_adj[color]

    def class_graph(self, color: Color) -> Graph:
        return Graph(self.host.n, self.class_adj(color), dict(self.host.roles))

    def swapped(self) -> "EdgeColoring":
        return EdgeColoring(self.host, tuple(c.other for c in self.colors))

    def extended(self, host: Graph, extra: Mapping[Edge, Color]) -> "EdgeColoring":
        """This coloring carried onto a supergraph `host`, with `extra` coloring the new edges."""
        if host.n < self.host.n:
            raise ColoringError("extension host has fewer vertices than the base host")
        assignment = self.as_mapping()
        for e, c in extra.items():
            e = norm_edge(*e)
            if e in assignment:
                raise ColoringError(f"extension recolors base edge {e}")
            assignment[e] = c
        return EdgeColoring.from_mapping(host, assignment)

    def restricted(self, sub: Graph) -> "EdgeColoring":
        """Restriction onto a labelled subgraph `sub` of the host."""
        try:
            return EdgeColoring(sub, tuple(self.color(u, v) for u, v in sub.edges))
        except ColoringError as e:
            raise ColoringError(f"restriction target is not a subgraph of the host: {e}") from e

    def __eq__(self, other) -> bool:
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return self.host.same_edges(other.host) and self.colors == other.colors

    def __hash__(self) -> int:
        return hash((self.host, self.colors))

    def to_dict(self) -> Dict[str, List[List[object]]]:
        return {"edges": [[u, v, c.value] for (u, v), c in zip(self.host.edges, self.colors)]}

    def __repr__(self) -> str:
        reds = sum(1 for c in self.colors if c is Color.RED)
        return f"EdgeColoring(m={len(self.colors)}, red={reds}, blue={len(self.colors) - reds})"


@dataclass(frozen=True)
class ColorPattern:
    observer: int
    targets: Tuple[int, ...]
    colors: Tuple[Color, ...]

    def __post_init__(self):
        if len(self.targets) != len(self.colors):
            raise ColoringError("color pattern length does not match its target set")

    def as_string(self) -> str:
        return "".join(c.value for c in self.colors)


def count_patterns(size: int) -> int:
    """Number of distinct color patterns over `size` targets."""
    return 2**size


def colors_from_string(text: Iterable[str]) -> Tuple[Color, ...]:
    return tuple(Color(ch) for ch in text)
