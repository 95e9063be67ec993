"""
Text formats for graphs, colorings and search reports.

graph6 goes through networkx once the input has been validated here (so that errors can
name a byte offset); JSON output is bit-exact: edges sorted with u < v, roles sorted by name.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Union

import networkx as nx

from models import Color, Edge, EdgeColoring, Graph, GraphCodecError, GraphError, norm_edge

from graphs.operations import build_graph, to_networkx

from .dot_export import to_dot

GRAPH6_HEADER = ">>graph6<<"
MAX_GRAPH6_VERTICES = 62


def _strip_graph6_header(text: str) -> tuple:
    """Returns (body, offset of body in the original text)."""
    offset = 0
    while offset < len(text) and text[offset].isspace():
        offset += 1
    if text.startswith(GRAPH6_HEADER, offset):
        offset += len(GRAPH6_HEADER)
    return text[offset:].rstrip(), offset


# ============================================================================
# graph6
# ============================================================================


def encode_graph6(g: Graph) -> str:
    if g.n > MAX_GRAPH6_VERTICES:
        raise GraphError(f"graph6 output supports n <= {MAX_GRAPH6_VERTICES}, got n={g.n}")
    if g.n == 0:
        return chr(63)
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii").strip()


def decode_graph6(text: Union[str, bytes]) -> Graph:
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as e:
            raise GraphCodecError("graph6 input is not ASCII", offset=e.start) from e
    body, start = _strip_graph6_header(text)
    if not body:
        raise GraphCodecError("empty graph6 input", offset=start)
    if "\n" in body:
        raise GraphCodecError("expected a single graph6 line", offset=start + body.index("\n"))
    for i, ch in enumerate(body):
        if not 63 <= ord(ch) <= 126:
            raise GraphCodecError(f"byte {ch!r} outside the graph6 range 63..126", offset=start + i)
    if body[0] == "~":
        raise GraphCodecError(
            f"graph6 header announces more than {MAX_GRAPH6_VERTICES} vertices; larger graphs are unsupported",
            offset=start,
        )
    n = ord(body[0]) - 63
    expected = (n * (n - 1) // 2 + 5) // 6
    if len(body) - 1 != expected:
        raise GraphCodecError(
            f"graph6 for n={n} needs {expected} data bytes, found {len(body) - 1}",
            offset=start + min(len(body), expected + 1),
        )
    if n <= 1:
        return build_graph(n, [])
    parsed = nx.from_graph6_bytes(body.encode("ascii"))
    return build_graph(n, sorted(tuple(sorted(e)) for e in parsed.edges()))


# ============================================================================
# JSON graph / coloring
# ============================================================================


def graph_to_dict(g: Graph) -> Dict[str, Any]:
    return {
        "n": g.n,
        "edges": [[u, v] for u, v in g.edges],
        "roles": {name: sorted(members) for name, members in g.roles.items()},
    }


def graph_to_json(g: Graph) -> str:
    return json.dumps(graph_to_dict(g))


def _load_json(text: Union[str, bytes]) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise GraphCodecError(f"malformed JSON: {e.msg}", offset=e.pos) from e


def _is_vertex(value: Any) -> bool:
    # bool is an int subclass; floats would truncate
    return isinstance(value, int) and not isinstance(value, bool)


def _check_vertices(values: List[Any], what: str) -> None:
    for value in values:
        if not _is_vertex(value):
            raise GraphCodecError(f"{what} holds {value!r}; vertices must be integers", offset=0)


def graph_from_dict(doc: Any) -> Graph:
    if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
        raise GraphCodecError('JSON graph must be an object with "n" and "edges"', offset=0)
    n = doc["n"]
    if not _is_vertex(n):
        raise GraphCodecError('"n" must be an integer', offset=0)
    edges = doc["edges"]
    if not isinstance(edges, list) or any(not isinstance(e, list) or len(e) != 2 for e in edges):
        raise GraphCodecError('"edges" must be a list of [u, v] pairs', offset=0)
    for edge in edges:
        _check_vertices(edge, f"edge {edge!r}")
    roles = doc.get("roles") or {}
    if not isinstance(roles, dict):
        raise GraphCodecError('"roles" must be an object of vertex lists', offset=0)
    for name, members in roles.items():
        if not isinstance(members, list):
            raise GraphCodecError(f"role {name!r} must be a list of vertices, got {members!r}", offset=0)
        _check_vertices(members, f"role {name!r}")
    return build_graph(n, edges, roles)


def graph_from_json(text: Union[str, bytes]) -> Graph:
    return graph_from_dict(_load_json(text))


def coloring_to_json(c: EdgeColoring) -> str:
    return json.dumps(c.to_dict())


def coloring_from_dict(doc: Any, host: Graph) -> EdgeColoring:
    if not isinstance(doc, dict) or not isinstance(doc.get("edges"), list):
        raise GraphCodecError('JSON coloring must be an object with an "edges" list', offset=0)
    assignment: Dict[Edge, Color] = {}
    for entry in doc["edges"]:
        if not isinstance(entry, list) or len(entry) != 3 or entry[2] not in ("R", "B"):
            raise GraphCodecError(f'coloring entry {entry!r} is not [u, v, "R"|"B"]', offset=0)
        _check_vertices(entry[:2], f"coloring entry {entry!r}")
        edge, color = norm_edge(entry[0], entry[1]), Color(entry[2])
        if assignment.get(edge, color) is not color:
            raise GraphCodecError(f"edge {edge} is colored both R and B", offset=0)
        assignment[edge] = color
    return EdgeColoring.from_mapping(host, assignment)


def coloring_from_json(text: Union[str, bytes], host: Graph) -> EdgeColoring:
    return coloring_from_dict(_load_json(text), host)


def dumps_report(report: Dict[str, Any]) -> str:
    """Stable JSON rendering used for every CLI report."""
    return json.dumps(report, sort_keys=True, indent=2)


# ============================================================================
# Files
# ============================================================================

GRAPH6_SUFFIXES = {".g6", ".graph6"}


def read_graph(path: Union[str, Path]) -> Graph:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise GraphCodecError(f"{path} is not UTF-8 text", offset=e.start) from e
    if path.suffix in GRAPH6_SUFFIXES:
        return decode_graph6(text)
    if path.suffix == ".json":
        return graph_from_json(text)
    raise GraphCodecError(f"unrecognised graph file suffix {path.suffix!r} (use .g6 or .json)", offset=0)


def write_graph(path: Union[str, Path], g: Graph, fmt: str = "json") -> None:
    path = Path(path)
    if fmt == "graph6":
        text = encode_graph6(g) + "\n"
    elif fmt == "json":
        text = graph_to_json(g) + "\n"
    elif fmt == "dot":
        text = to_dot(g)
    else:
        raise GraphError(f"unknown graph format {fmt!r}")
    path.write_text(text, encoding="utf-8")


def read_coloring(path: Union[str, Path], host: Graph) -> EdgeColoring:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise GraphCodecError(f"{path} is not UTF-8 text", offset=e.start) from e
    return coloring_from_json(text, host)
