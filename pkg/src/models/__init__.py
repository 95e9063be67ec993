# models/__init__.py
from .coloring import Color, ColorPattern, EdgeColoring, count_patterns
from .errors import (
    BudgetExhausted,
    ColoringError,
    ConstructionError,
    GraphArrowsHError,
    GraphCodecError,
    GraphError,
    HypothesisError,
    NoCandidateArrowsError,
    NotArrowingError,
    NotDisjointError,
    PreconditionError,
    RamseyForgeError,
    UsageError,
)
from .graph import Edge, Embedding, Graph, GraphStats, iter_bits, mask_of, norm_edge
from .results import (
    ArrowingResult,
    BelGadget,
    ColoredConstruction,
    EpsilonComponent,
    GadgetCertificate,
    SearchStats,
    SignalSender,
    Verdict,
)

__all__ = [
    "Color",
    "ColorPattern",
    "EdgeColoring",
    "count_patterns",
    "Edge",
    "Embedding",
    "Graph",
    "GraphStats",
    "iter_bits",
    "mask_of",
    "norm_edge",
    "ArrowingResult",
    "BelGadget",
    "ColoredConstruction",
    "EpsilonComponent",
    "GadgetCertificate",
    "SearchStats",
    "SignalSender",
    "Verdict",
    "BudgetExhausted",
    "ColoringError",
    "ConstructionError",
    "GraphArrowsHError",
    "GraphCodecError",
    "GraphError",
    "HypothesisError",
    "NoCandidateArrowsError",
    "NotArrowingError",
    "NotDisjointError",
    "PreconditionError",
    "RamseyForgeError",
    "UsageError",
]
