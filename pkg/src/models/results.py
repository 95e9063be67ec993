# models/results.py
import enum
from dataclasses import dataclass, field, replace
from typing import Any, Dict, List, Optional, Tuple, Union

from .coloring import Color, EdgeColoring
from .errors import ColoringError, ConstructionError
from .graph import Edge, Embedding, Graph, norm_edge


class Verdict(enum.Enum):
    ARROWS = "arrows"
    NOT_ARROWS = "not_arrows"
    BUDGET = "budget"


@dataclass
class SearchStats:
    nodes: int = 0
    prunes: int = 0
    wall_time_ms: float = 0.0
    subtrees: int = 1

    def merge(self, other: "SearchStats") -> "SearchStats":
        return SearchStats(
            nodes=self.nodes + other.nodes,
            prunes=self.prunes + other.prunes,
            wall_time_ms=max(self.wall_time_ms, other.wall_time_ms),
            subtrees=self.subtrees + other.subtrees,
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "nodes": self.nodes,
            "prunes": self.prunes,
            "wall_time_ms": round(self.wall_time_ms, 3),
            "subtrees": self.subtrees,
        }


@dataclass(frozen=True)
class ArrowingResult:
    verdict: Verdict
    witness: Optional[EdgeColoring]
    stats: SearchStats

    def __post_init__(self):
        if (self.verdict is Verdict.NOT_ARROWS) != (self.witness is not None):
            raise ValueError("a witness is present exactly when the verdict is not_arrows")

    @property
    def arrows(self) -> bool:
        return self.verdict is Verdict.ARROWS

    def to_dict(self, with_timing: bool = True) -> Dict[str, Any]:
        stats = self.stats.to_dict()
        if not with_timing:
            stats.pop("wall_time_ms")
        return {
            "verdict": self.verdict.value,
            "witness": self.witness.to_dict() if self.witness is not None else None,
            "stats": stats,
        }


# ============================================================================
# GADGET CERTIFICATES
# ============================================================================


@dataclass(frozen=True)
class SignalSender:
    """Distinguished vertex-disjoint edges e, f; `coloring` is a mono-free coloring with e, f red."""

    e: Edge
    f: Edge
    coloring: Optional[EdgeColoring] = None


@dataclass(frozen=True)
class BelGadget:
    """Template graph `psi.host` embedded into the gadget by `embedding`, with forced coloring psi."""

    embedding: Embedding
    psi: EdgeColoring

    @property
    def template(self) -> Graph:
        return self.psi.host

    def image_edges(self) -> List[Edge]:
        return [norm_edge(self.embedding[u], self.embedding[v]) for u, v in self.template.edges]


@dataclass(frozen=True)
class EpsilonComponent:
    h: Graph
    eps: float


GadgetKind = Union[SignalSender, BelGadget, EpsilonComponent]


@dataclass(frozen=True)
class GadgetCertificate:
    graph: Graph
    kind: GadgetKind
    target: Graph
    verified: bool = False

    def __post_init__(self):
        kind = self.kind
        if isinstance(kind, SignalSender):
            for e in (kind.e, kind.f):
                if not self.graph.has_edge(*e):
                    raise ConstructionError(f"distinguished edge {e} is not an edge of the gadget")
            if kind.coloring is not None and not kind.coloring.host.same_edges(self.graph):
                raise ColoringError("sender coloring is not a coloring of the gadget graph")
        elif isinstance(kind, BelGadget):
            if not kind.embedding.is_valid(kind.template, self.graph):
                raise ConstructionError("BEL template is not embedded in the gadget graph")

    def with_verified(self, verified: bool = True, **changes) -> "GadgetCertificate":
        return replace(self, verified=verified, **changes)

    def describe(self) -> Dict[str, Any]:
        kind = self.kind
        if isinstance(kind, SignalSender):
            detail: Dict[str, Any] = {"type": "signal_sender", "e": list(kind.e), "f": list(kind.f)}
        elif isinstance(kind, BelGadget):
            detail = {"type": "bel_gadget", "template_edges": [list(e) for e in kind.image_edges()]}
        else:
            detail = {"type": "epsilon_component", "eps": kind.eps}
        detail.update({"n": self.graph.n, "edges": self.graph.num_edges, "verified": self.verified})
        return detail


# ============================================================================
# CONSTRUCTIONS
# ============================================================================


@dataclass(frozen=True)
class ColoredConstruction:
    """
    A constructed graph with its coloring psi.

    `psi.host` has the same vertex labels as `graph`; it covers every edge except
    `free_edges` (edges the construction deliberately leaves open, e.g. apex edges).
    """

    graph: Graph
    psi: Optional[EdgeColoring]
    name: str = ""
    params: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.psi is None:
            return
        if self.psi.host.n != self.graph.n:
            raise ColoringError("psi host and construction graph disagree on vertex count")
        for u, v in self.psi.host.edges:
            if not self.graph.has_edge(u, v):
                raise ColoringError(f"psi colors ({u},{v}) which is not a construction edge")

    @property
    def roles(self):
        return self.graph.roles

    @property
    def free_edges(self) -> Tuple[Edge, ...]:
        if self.psi is None:
            return self.graph.edges
        colored = self.psi.host.edge_index
        return tuple(e for e in self.graph.edges if e not in colored)

    def summary(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "params": self.params,
            "n": self.graph.n,
            "edges": self.graph.num_edges,
            "red": len(self.psi.edges_of(Color.RED)) if self.psi is not None else None,
            "roles": sorted(self.graph.roles),
        }
