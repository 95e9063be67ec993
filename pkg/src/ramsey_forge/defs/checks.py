"""
Checks run by the verify_<experiment> assets.

Each check takes the built construction (None for experiments without one), the experiment's raw
params and the engine, and returns one dict per table row.
"""

from itertools import combinations, product
from typing import Any, Callable, Dict, List, Optional

from models import Color, ColoredConstruction, Graph, NoCandidateArrowsError

from coloring import find_mono_copy
from constructions import attach_apex, make_H_t_d
from engine import (
    ArrowingEngine,
    check_lower_bounds,
    is_signal_sender,
    ramsey_number_desk,
    s_min_degree_witness_search,
    uncovered_subsets,
    verify_apex_property,
)
from graphs import complete_graph, find_embedding, set_distance
from graphs.operations import delete_vertex_edges
from utils.named_graphs import load_graph

Row = Dict[str, Any]
Check = Callable[[Optional[ColoredConstruction], Dict[str, Any], ArrowingEngine], List[Row]]


def ramsey_numbers(construction: Optional[ColoredConstruction], params: Dict[str, Any], engine: ArrowingEngine) -> List[Row]:
    rows = []
    for token in params["targets"]:
        value = ramsey_number_desk(load_graph(token), params["n_max"], engine=engine)
        rows.append(
            {
                "target": token,
                "n_max": params["n_max"],
                "ramsey_number": value,
                "status": "exact" if value is not None else f"not found <= {params['n_max']}",
            }
        )
    return rows


def s_upper_bounds(construction: Optional[ColoredConstruction], params: Dict[str, Any], engine: ArrowingEngine) -> List[Row]:
    rows = []
    for case in params["cases"]:
        h = load_graph(case["h"])
        row: Row = {"target": case["h"], "candidates": ",".join(case["candidates"])}
        try:
            result = s_min_degree_witness_search(h, [load_graph(c) for c in case["candidates"]], engine=engine)
        except NoCandidateArrowsError:
            row.update({"candidates_arrowing": 0, "min_degree": None, "status": "no candidate arrows", "consistent": None})
        else:
            bounds = check_lower_bounds(result.witness, h)
            row.update(
                {
                    "candidates_arrowing": result.candidates_arrowing,
                    "min_degree": result.best,
                    "status": "upper bound",
                    "consistent": bounds["consistent"],
                }
            )
        rows.append(row)
    return rows


def apex_attachments(construction: Optional[ColoredConstruction], params: Dict[str, Any], engine: ArrowingEngine) -> List[Row]:
    """For every apex pick (d vertices per red clique) and every apex coloring, look for a mono H_{t,d}."""
    t, d = params["t"], params["d"]
    h = make_H_t_d(t, d)
    parts = [f"T_{i + 1}" for i in range(d)]
    rows = []
    choices = [list(combinations(sorted(construction.graph.role(p)), d)) for p in parts]
    for picks in product(*choices):
        graph = attach_apex(construction, dict(zip(parts, picks)), d)
        apex = graph.n - 1
        apex_edges = [(v, apex) for v in graph.neighbors(apex)]
        red = blue = 0
        for colors in product((Color.RED, Color.BLUE), repeat=len(apex_edges)):
            coloring = construction.psi.extended(graph, dict(zip(apex_edges, colors)))
            found = find_mono_copy(coloring, h)
            if found is None:
                continue
            if found[0] is Color.RED:
                red += 1
            else:
                blue += 1
        total = 2 ** len(apex_edges)
        rows.append(
            {
                "picks": " ".join("{" + ",".join(map(str, p)) + "}" for p in picks),
                "colorings": total,
                "red_copies": red,
                "blue_copies": blue,
                "all_monochromatic": red + blue == total,
            }
        )
    return rows


def join_coloring(construction: Optional[ColoredConstruction], params: Dict[str, Any], engine: ArrowingEngine) -> List[Row]:
    t = params["t"]
    psi = construction.psi
    red_copy = find_embedding(make_H_t_d(t, 2), psi.class_graph(Color.RED))
    blue_copy = find_embedding(complete_graph(t), psi.class_graph(Color.BLUE))
    return [
        {
            "n": construction.graph.n,
            "edges": construction.graph.num_edges,
            "red_edges": len(psi.edges_of(Color.RED)),
            "red_h_t_2": red_copy is not None,
            "blue_k_t": blue_copy is not None,
        }
    ]


def _without_private(g: Graph, members, s) -> Graph:
    for x in sorted(set(members) - set(s)):
        g = delete_vertex_edges(g, x)
    return g


def apex_property(construction: Optional[ColoredConstruction], params: Dict[str, Any], engine: ArrowingEngine) -> List[Row]:
    """Per copy of H - v: its subset is covered, and dropping that copy uncovers it."""
    h = load_graph(params["h"])
    d = h.degree(params["v"])
    g = construction.graph
    s = sorted(g.role("S"))
    missing = set(uncovered_subsets(g, "S", d, h))
    rows = []
    for role, members in g.roles.items():
        if role == "S":
            continue
        subset = tuple(sorted(set(members) & set(s)))
        reduced = _without_private(g, members, s)
        rows.append(
            {
                "copy": role,
                "covered": subset not in missing,
                "holds_without_copy": verify_apex_property(reduced, "S", d, h),
            }
        )
    return rows


def apex_pigeonhole(construction: Optional[ColoredConstruction], params: Dict[str, Any], engine: ArrowingEngine) -> List[Row]:
    """Each coloring of the apex edges, on top of psi, has a monochromatic H using the apex."""
    h = load_graph(params["h"])
    graph = construction.graph
    apex = min(graph.role("apex"))
    apex_edges = construction.free_edges
    rows = []
    for colors in product((Color.RED, Color.BLUE), repeat=len(apex_edges)):
        coloring = construction.psi.extended(graph, dict(zip(apex_edges, colors)))
        found = find_mono_copy(coloring, h)
        rows.append(
            {
                "apex_colors": "".join(c.value for c in colors),
                "mono_color": found[0].value if found else None,
                "through_apex": found is not None and apex in found[1].image(),
            }
        )
    return rows


def signal_sender(construction: Optional[ColoredConstruction], params: Dict[str, Any], engine: ArrowingEngine) -> List[Row]:
    h = load_graph(params["h"])
    g = construction.graph
    e, f = tuple(sorted(g.role("e"))), tuple(sorted(g.role("f")))
    return [
        {
            "n": g.n,
            "edges": g.num_edges,
            "e_f_distance": set_distance(g, e, f),
            "is_sender": is_signal_sender(g, e, f, h, engine=engine),
        }
    ]


CHECKS: Dict[str, Check] = {
    "ramsey_numbers": ramsey_numbers,
    "s_upper_bounds": s_upper_bounds,
    "apex_attachments": apex_attachments,
    "join_coloring": join_coloring,
    "apex_property": apex_property,
    "apex_pigeonhole": apex_pigeonhole,
    "signal_sender": signal_sender,
}
