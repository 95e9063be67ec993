"""
Graph arguments: a .g6/.graph6/.json path or a named token such as k6, c5, p3, s3, k3x3,
petersen, h3_2, m2 (2K_2) or e4 (4 isolated vertices).
"""

import re
from pathlib import Path
from typing import Callable, Dict, List, Tuple

from models import Graph, GraphError

from constructions.cliques import make_H_t_d
from graphs.operations import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    matching_graph,
    path_graph,
    petersen_graph,
    star_graph,
)

from .graph_codec import read_graph

_PATTERNS: List[Tuple[re.Pattern, Callable[..., Graph]]] = [
    (re.compile(r"k(\d+)x(\d+)"), lambda a, b: complete_bipartite(int(a), int(b))),
    (re.compile(r"k(\d+)"), lambda n: complete_graph(int(n))),
    (re.compile(r"c(\d+)"), lambda n: cycle_graph(int(n))),
    (re.compile(r"p(\d+)"), lambda n: path_graph(int(n))),
    (re.compile(r"s(\d+)"), lambda k: star_graph(int(k))),
    (re.compile(r"m(\d+)"), lambda k: matching_graph(int(k))),
    (re.compile(r"e(\d+)"), lambda n: empty_graph(int(n))),
    (re.compile(r"h(\d+)_(\d+)"), lambda t, d: make_H_t_d(int(t), int(d))),
    (re.compile(r"petersen"), lambda: petersen_graph()),
]

NAMED_EXAMPLES: Dict[str, str] = {
    "k<n>": "complete graph K_n",
    "c<n>": "cycle C_n",
    "p<n>": "path on n vertices",
    "s<k>": "star K_{1,k}",
    "k<a>x<b>": "complete bipartite K_{a,b}",
    "m<k>": "k disjoint edges",
    "e<n>": "n isolated vertices",
    "h<t>_<d>": "K_t plus an apex of degree d",
    "petersen": "Petersen graph",
}


def named_graph(token: str) -> Graph:
    token = token.strip().lower()
    for pattern, factory in _PATTERNS:
        match = pattern.fullmatch(token)
        if match:
            return factory(*match.groups())
    raise GraphError(f"unknown graph name {token!r}; expected a file path or one of {sorted(NAMED_EXAMPLES)}")


def load_graph(arg: str) -> Graph:
    """A file path when one exists, otherwise a named graph token."""
    path = Path(arg)
    if path.suffix in {".g6", ".graph6", ".json"}:
        return read_graph(path)
    return named_graph(arg)
