"""
Unpruned reference enumeration, used to cross-check the search engine on small inputs.
"""

from itertools import product
from typing import Iterator

from models import Color, EdgeColoring, Graph

from coloring.queries import find_mono_copy
from graphs.embedding import compile_pattern


def enumerate_mono_free(f: Graph, h: Graph) -> Iterator[EdgeColoring]:
    """Every mono-free coloring of f, in lexicographic order of the color vector (red first)."""
    pattern = compile_pattern(h)
    for colors in product((Color.RED, Color.BLUE), repeat=f.num_edges):
        coloring = EdgeColoring(f, colors)
        if find_mono_copy(coloring, h, pattern) is None:
            yield coloring


def naive_arrows(f: Graph, h: Graph) -> bool:
    return next(enumerate_mono_free(f, h), None) is None
