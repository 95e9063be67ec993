"""
DOT rendering: red/blue edge colors, uncolored edges dashed grey, role subsets boxed as clusters.
"""

from typing import List, Optional

from models import Color, EdgeColoring, Graph

EDGE_COLORS = {Color.RED: "red", Color.BLUE: "blue"}


def _cluster_roles(g: Graph) -> List[str]:
    """Roles drawn as clusters: sorted by name, skipping any that overlap an earlier cluster."""
    taken = set()
    chosen = []
    for name, members in g.roles.items():
        if not members or members & taken:
            continue
        taken |= members
        chosen.append(name)
    return chosen


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Graph, coloring: Optional[EdgeColoring] = None, name: str = "G") -> str:
    lines = [f"graph {_quote(name)} {{", "  node [shape=circle];"]
    for i, role in enumerate(_cluster_roles(g)):
        lines.append(f"  subgraph cluster_{i} {{")
        lines.append(f"    label={_quote(role)};")
        lines.append("    style=rounded;")
        lines.append("    " + " ".join(f"{v};" for v in sorted(g.roles[role])))
        lines.append("  }")
    for v in g.isolated_vertices():
        lines.append(f"  {v};")
    colored = coloring.host.edge_index if coloring is not None else {}
    for u, v in g.edges:
        if (u, v) in colored:
            color = EDGE_COLORS[coloring.colors[colored[(u, v)]]]
            lines.append(f"  {u} -- {v} [color={color}];")
        elif coloring is not None:
            lines.append(f"  {u} -- {v} [color=gray, style=dashed];")
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
