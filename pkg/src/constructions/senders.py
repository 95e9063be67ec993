"""
Signal senders and the weak/strong BEL frames built from them.
"""

from typing import Dict, List, Sequence, Tuple

from dagster import get_dagster_logger

from models import (
    Color,
    ColoredConstruction,
    ConstructionError,
    Edge,
    EdgeColoring,
    GadgetCertificate,
    Graph,
    PreconditionError,
    SignalSender,
    norm_edge,
)

from graphs.canonical import are_isomorphic
from graphs.embedding import find_embedding
from graphs.operations import build_graph, is_connected, path_graph, set_distance

logger = get_dagster_logger("constructions.senders")


def make_path_sender(n: int, h: Graph) -> GadgetCertificate:
    """Path on n vertices with its two end edges distinguished (unverified)."""
    if n < 4:
        raise PreconditionError(f"a path sender needs at least 4 vertices, got {n}")
    g = path_graph(n)
    g = build_graph(n, g.edges, {"e": [0, 1], "f": [n - 2, n - 1]})
    return GadgetCertificate(g, SignalSender((0, 1), (n - 2, n - 1)), h)


def _sender(cert: GadgetCertificate) -> SignalSender:
    if not isinstance(cert.kind, SignalSender):
        raise PreconditionError("expected a signal sender certificate")
    return cert.kind


def _glue_map(source: Graph, pins: Sequence[Tuple[int, int]], next_vertex: int) -> Tuple[Dict[int, int], int]:
    """Vertex map for a copy of `source`: pinned vertices go where told, the rest get fresh labels."""
    mapping = dict(pins)
    for x in range(source.n):
        if x not in mapping:
            mapping[x] = next_vertex
            next_vertex += 1
    return mapping, next_vertex


def chain_senders(g1: GadgetCertificate, g2: GadgetCertificate) -> GadgetCertificate:
    """Identify g2's e with g1's f (endpoint by endpoint); the result keeps e from g1 and f from g2."""
    s1, s2 = _sender(g1), _sender(g2)
    if not are_isomorphic(g1.target, g2.target):
        raise ConstructionError("senders are certified for different target graphs")
    mapping, total = _glue_map(g2.graph, [(s2.e[0], s1.f[0]), (s2.e[1], s1.f[1])], g1.graph.n)
    edges = set(g1.graph.edges)
    for u, v in g2.graph.edges:
        glued = norm_edge(mapping[u], mapping[v])
        if glued in edges and glued != norm_edge(*s1.f):
            raise ConstructionError(f"gluing produces a multi-edge at {glued}")
        edges.add(glued)
    e = s1.e
    f = norm_edge(mapping[s2.f[0]], mapping[s2.f[1]])
    roles = {
        "e": list(e),
        "f": list(f),
        "sender_1": range(g1.graph.n),
        "sender_2": sorted(mapping.values()),
    }
    graph = build_graph(total, sorted(edges), roles)
    distance = set_distance(graph, e, f)
    if distance is not None and distance < 3:
        raise ConstructionError(f"chained sender has e-f distance {distance}, expected at least 3")
    logger.info(f"chained senders: n={graph.n}, m={graph.num_edges}, e-f distance {distance}")
    return GadgetCertificate(graph, SignalSender(e, f), g1.target)


def make_weak_bel_frame(g0: Graph, g1: Graph, sender: GadgetCertificate) -> ColoredConstruction:
    """
    g0 ∪ g1 plus fresh edges e_0 = (n, n+1), e_1 = (n+2, n+3), and one sender copy per edge of g0
    (joining e_0 to it) and per edge of g1 (joining e_1 to it). Copies are appended in edge order,
    g0 first.
    """
    kind = _sender(sender)
    h = sender.target
    if g0.n != g1.n:
        raise PreconditionError(f"G_0 and G_1 must share a vertex set (n={g0.n} vs n={g1.n})")
    shared = set(g0.edges) & set(g1.edges)
    if shared:
        raise PreconditionError(f"G_0 and G_1 share edges: {sorted(shared)[:5]}")
    for name, g in (("G_0", g0), ("G_1", g1)):
        if find_embedding(h, g) is not None:
            raise PreconditionError(f"{name} contains a copy of H")
    if not sender.verified or kind.coloring is None:
        raise PreconditionError("sender must be verified and carry a mono-free coloring with e, f red")

    n = g0.n
    e0, e1 = (n, n + 1), (n + 2, n + 3)
    colors: Dict[Edge, Color] = {}
    for e in g0.edges:
        colors[e] = Color.RED
    for e in g1.edges:
        colors[e] = Color.BLUE
    colors[e0] = Color.RED
    colors[e1] = Color.BLUE
    roles: Dict[str, List[int]] = {name: sorted(members) for name, members in g1.roles.items()}
    roles.update({name: sorted(members) for name, members in g0.roles.items()})
    roles.update({"e_0": list(e0), "e_1": list(e1)})

    next_vertex = n + 4
    for side, (base, anchor, flip) in enumerate(((g0, e0, False), (g1, e1, True))):
        sender_colors = kind.coloring.swapped() if flip else kind.coloring
        for k, (a, b) in enumerate(base.edges):
            pins = [(kind.e[0], anchor[0]), (kind.e[1], anchor[1]), (kind.f[0], a), (kind.f[1], b)]
            mapping, next_vertex = _glue_map(sender.graph, pins, next_vertex)
            pinned = {anchor, (a, b)}
            for (u, v), c in zip(sender.graph.edges, sender_colors.colors):
                e = norm_edge(mapping[u], mapping[v])
                if e in pinned:
                    continue
                if e in colors:
                    raise ConstructionError(f"sender copy produces a multi-edge at {e}")
                colors[e] = c
            roles[f"sender_{side}_{k}"] = sorted(mapping.values())

    graph = build_graph(next_vertex, list(colors), roles)
    psi = EdgeColoring.from_mapping(graph, colors)
    logger.info(f"weak BEL frame: n={graph.n}, m={graph.num_edges}, copies={g0.num_edges + g1.num_edges}")
    return ColoredConstruction(graph, psi, "weak_bel_frame", {"copies": g0.num_edges + g1.num_edges})


def weak_to_strong_frame(g: Graph, psi: EdgeColoring, h: Graph) -> Tuple[Graph, Graph]:
    """
    G_0 = blue graph of psi plus S carrying H minus its first edge; G_1 = red graph of psi plus S
    carrying only that edge. S = n .. n+|V(h)|-1 (role "S").
    """
    if h.num_edges == 0 or not is_connected(h):
        raise PreconditionError("H must be connected with at least one edge")
    if not psi.host.same_edges(g):
        raise PreconditionError("psi must color exactly the edges of g")
    n = g.n
    x, y = h.edges[0]
    s = list(range(n, n + h.n))
    missing = (n + x, n + y)
    rest = [(n + u, n + v) for u, v in h.edges[1:]]
    roles = {name: sorted(members) for name, members in g.roles.items()}
    roles["S"] = s
    g0 = build_graph(n + h.n, psi.edges_of(Color.BLUE) + rest, roles)
    g1 = build_graph(n + h.n, psi.edges_of(Color.RED) + [missing], roles)
    for name, part in (("G_0", g0), ("G_1", g1)):
        if find_embedding(h, part) is not None:
            raise ConstructionError(f"{name} contains a copy of H; psi already has a monochromatic H")
    return g0, g1

