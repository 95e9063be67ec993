"""
Verifiers for gadget properties: signal senders, BEL gadgets, apex gadgets and
ε-arrowing components. All of them are exhaustive and meant for desk-scale graphs.
"""

from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from dagster import get_dagster_logger

from models import (
    BelGadget,
    Color,
    Edge,
    EpsilonComponent,
    GadgetCertificate,
    Graph,
    GraphArrowsHError,
    NotDisjointError,
    PreconditionError,
    SignalSender,
    norm_edge,
)

from graphs.embedding import find_embedding
from graphs.operations import add_vertex

from .arrowing import ArrowingEngine, SearchBudget, default_engine

logger = get_dagster_logger("engine.gadgets")


def _check_sender_edges(g: Graph, e: Edge, f: Edge) -> Tuple[Edge, Edge]:
    e, f = norm_edge(*e), norm_edge(*f)
    for name, edge in (("e", e), ("f", f)):
        if not g.has_edge(*edge):
            raise PreconditionError(f"{name}={edge} is not an edge of the gadget graph")
    if set(e) & set(f):
        raise NotDisjointError(f"distinguished edges {e} and {f} share a vertex")
    return e, f


def is_signal_sender(
    g: Graph,
    e: Edge,
    f: Edge,
    h: Graph,
    budget: Optional[SearchBudget] = None,
    engine: Optional[ArrowingEngine] = None,
) -> bool:
    """
    Whether every mono-free coloring of g gives e and f the same color.
    By color symmetry it suffices that no mono-free coloring has e red and f blue.
    """
    engine = default_engine(engine)
    e, f = _check_sender_edges(g, e, f)
    if engine.arrows(g, h, budget).arrows:
        raise GraphArrowsHError("the gadget graph arrows H, so it has no mono-free coloring to constrain")
    discordant = engine.find_coloring(g, h, {e: Color.RED, f: Color.BLUE}, budget)
    return discordant is None


def verify_bel_property(
    cert: GadgetCertificate,
    h: Graph,
    budget: Optional[SearchBudget] = None,
    engine: Optional[ArrowingEngine] = None,
) -> bool:
    """
    (a) the gadget does not arrow h, and (b) every mono-free coloring restricts on the
    embedded template to psi or its swap. The swap is global across the template.
    """
    engine = default_engine(engine)
    if not isinstance(cert.kind, BelGadget):
        raise PreconditionError("verify_bel_property needs a BelGadget certificate")
    gadget = cert.kind
    if engine.arrows(cert.graph, h, budget).arrows:
        logger.info("BEL check: gadget graph arrows H")
        return False
    images = gadget.image_edges()
    if len(images) < 2:
        return True
    anchor, anchor_color = images[0], gadget.psi.colors[0]
    for image, color in zip(images[1:], gadget.psi.colors[1:]):
        # with the anchor red, the image must be red exactly when psi agrees with the anchor
        wanted = Color.RED if color is anchor_color else Color.BLUE
        broken = engine.find_coloring(cert.graph, h, {anchor: Color.RED, image: wanted.other}, budget)
        if broken is not None:
            logger.info(f"BEL check: mono-free coloring breaks the template relation at {image}")
            return False
    return True


def _apex_set(g: Graph, s: Union[str, Iterable[int]], d: int) -> List[int]:
    vertices = sorted(g.role(s)) if isinstance(s, str) else sorted(set(s))
    if len(vertices) < d:
        raise PreconditionError(f"|S|={len(vertices)} is smaller than d={d}")
    for a, b in combinations(vertices, 2):
        if g.has_edge(a, b):
            raise PreconditionError(f"S is not independent: ({a},{b}) is an edge")
    return vertices


def uncovered_subsets(
    g: Graph,
    s: Union[str, Iterable[int]],
    d: int,
    h: Graph,
    subsets: Optional[Iterable[Sequence[int]]] = None,
) -> List[Tuple[int, ...]]:
    """d-subsets S' of s for which g plus a vertex joined to S' still has no copy of h."""
    vertices = _apex_set(g, s, d)
    chosen = combinations(vertices, d) if subsets is None else (tuple(sorted(x)) for x in subsets)
    missing = []
    for subset in chosen:
        if find_embedding(h, add_vertex(g, subset)) is None:
            missing.append(subset)
    return missing


def verify_apex_property(
    g: Graph,
    s: Union[str, Iterable[int]],
    d: int,
    h: Graph,
    subsets: Optional[Iterable[Sequence[int]]] = None,
) -> bool:
    """
    g is H-free, and adding a vertex joined to any d vertices of the independent set s creates H.
    `subsets` restricts the second half to a sample of d-subsets.
    """
    _apex_set(g, s, d)
    if find_embedding(h, g) is not None:
        logger.info("apex check: gadget already contains H")
        return False
    return not uncovered_subsets(g, s, d, h, subsets)


def verify_epsilon_component(
    cert: GadgetCertificate, budget: Optional[SearchBudget] = None, engine: Optional[ArrowingEngine] = None
) -> bool:
    if not isinstance(cert.kind, EpsilonComponent):
        raise PreconditionError("verify_epsilon_component needs an EpsilonComponent certificate")
    return default_engine(engine).epsilon_arrows(cert.graph, cert.kind.h, cert.kind.eps, budget)


def certify(
    cert: GadgetCertificate, budget: Optional[SearchBudget] = None, engine: Optional[ArrowingEngine] = None
) -> GadgetCertificate:
    """Run the exhaustive check for the certificate's kind; returns it with `verified` set to the outcome."""
    engine = default_engine(engine)
    kind = cert.kind
    if isinstance(kind, SignalSender):
        ok = is_signal_sender(cert.graph, kind.e, kind.f, cert.target, budget, engine)
        if not ok:
            return cert.with_verified(False)
        coloring = engine.find_coloring(cert.graph, cert.target, {kind.e: Color.RED}, budget)
        sender = SignalSender(kind.e, kind.f, coloring)
        return cert.with_verified(True, kind=sender)
    if isinstance(kind, BelGadget):
        return cert.with_verified(verify_bel_property(cert, cert.target, budget, engine))
    return cert.with_verified(verify_epsilon_component(cert, budget, engine))
