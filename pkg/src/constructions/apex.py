"""
Apex gadgets for regular H and the doubled frame witnessing Ramsey simplicity.

Labelling: S = 0 .. 2d-2; then one block per d-subset S' of S (subsets in `combinations`
order) holding the private vertices of that copy of H - v in ascending order of their H label.
N(v), ascending, is identified onto S', ascending.
"""

from itertools import combinations
from typing import Dict, List, Optional

from dagster import get_dagster_logger

from models import (
    BelGadget,
    Color,
    ColoredConstruction,
    Edge,
    EdgeColoring,
    GadgetCertificate,
    Graph,
    HypothesisError,
    PreconditionError,
    norm_edge,
)

from graphs.operations import add_vertex, build_graph, induced_subgraph, is_connected

logger = get_dagster_logger("constructions.apex")


def check_apex_hypotheses(h: Graph, v: int) -> int:
    """Returns d after checking that h is d-regular (d >= 1), N(v) is independent and H - v - N(v) is connected."""
    if not 0 <= v < h.n:
        raise PreconditionError(f"vertex {v} outside 0..{h.n - 1}")
    degrees = set(h.degrees)
    if len(degrees) != 1:
        raise HypothesisError("regular", f"degrees {sorted(degrees)}")
    d = degrees.pop()
    if d < 1:
        raise HypothesisError("regular", "degree must be at least 1")
    neighborhood = h.neighbors(v)
    for a, b in combinations(neighborhood, 2):
        if h.has_edge(a, b):
            raise HypothesisError("independent neighbourhood", f"N({v}) contains the edge ({a},{b})")
    rest, _ = induced_subgraph(h, [x for x in range(h.n) if x != v and x not in neighborhood])
    if not is_connected(rest):
        raise HypothesisError("connected remainder", f"H - {v} - N({v}) is disconnected")
    return d


def copy_role(subset) -> str:
    return "copy(" + ",".join(str(x) for x in subset) + ")"


def make_apex_gadget(h: Graph, v: int) -> ColoredConstruction:
    """Independent set S of size 2d-1 with a copy of h - v glued onto every d-subset of S."""
    d = check_apex_hypotheses(h, v)
    size = 2 * d - 1
    neighborhood = h.neighbors(v)
    private = [x for x in range(h.n) if x != v and x not in neighborhood]
    edges: List[Edge] = []
    roles: Dict[str, List[int]] = {"S": list(range(size))}
    next_vertex = size
    for subset in combinations(range(size), d):
        mapping = dict(zip(neighborhood, subset))
        for x in private:
            mapping[x] = next_vertex
            next_vertex += 1
        for a, b in h.edges:
            if v not in (a, b):
                edges.append((mapping[a], mapping[b]))
        roles[copy_role(subset)] = sorted(mapping.values())
    graph = build_graph(next_vertex, edges, roles)
    logger.info(f"apex gadget d={d}: n={graph.n}, m={graph.num_edges}, copies={len(roles) - 1}")
    return ColoredConstruction(graph, None, "apex_gadget", {"v": v, "d": d})


def make_simplicity_witness(h: Graph, v: int, bel: Optional[GadgetCertificate] = None) -> ColoredConstruction:
    """
    Two apex gadgets sharing S, one red and one blue, plus an apex joined to all of S.

    Without `bel` the frame itself is returned with psi on everything but the apex edges. With
    `bel`, whose template must be the colored frame (up to a global swap), the apex is attached to
    the BEL gadget through its embedding instead.
    """
    gadget = make_apex_gadget(h, v).graph
    size = 2 * h.degree(v) - 1
    s = list(range(size))
    shift = gadget.n - size

    def second(x: int) -> int:
        return x if x < size else x + shift

    n = gadget.n + shift
    colors: Dict[Edge, Color] = {}
    for a, b in gadget.edges:
        colors[(a, b)] = Color.RED
        colors[norm_edge(second(a), second(b))] = Color.BLUE
    roles = {
        "S": s,
        "copy_red": list(range(gadget.n)),
        "copy_blue": sorted(second(x) for x in range(gadget.n)),
    }
    frame = build_graph(n, list(colors), roles)
    psi = EdgeColoring.from_mapping(frame, colors)
    if bel is None:
        graph = add_vertex(frame, s, role="apex")
        psi = EdgeColoring(build_graph(graph.n, frame.edges), psi.colors)
        logger.info(f"simplicity witness frame: n={graph.n}, m={graph.num_edges}, apex degree {size}")
        return ColoredConstruction(graph, psi, "simplicity_witness", {"v": v, "apex_degree": size})

    if not isinstance(bel.kind, BelGadget):
        raise PreconditionError("bel must be a BelGadget certificate")
    template = bel.kind.psi
    if not template.host.same_edges(frame) or template.colors not in (psi.colors, psi.swapped().colors):
        raise PreconditionError("BEL template is not the colored simplicity frame")
    embed = bel.kind.embedding
    graph = add_vertex(bel.graph, [embed[x] for x in s], role="apex")
    image = build_graph(graph.n, [norm_edge(embed[a], embed[b]) for a, b in frame.edges])
    mapped = {norm_edge(embed[a], embed[b]): c for (a, b), c in zip(frame.edges, template.colors)}
    return ColoredConstruction(
        graph,
        EdgeColoring.from_mapping(image, mapped),
        "simplicity_witness",
        {"v": v, "apex_degree": size, "bel": True},
    )
