"""
Queries on red/blue edge colorings.
"""

from typing import Optional, Sequence, Tuple

from models import Color, ColoringError, ColorPattern, EdgeColoring, Embedding, Graph

from graphs.embedding import Pattern, compile_pattern, embed_in_rows
from graphs.stats import find_clique

MonoCopy = Tuple[Color, Embedding]


def find_mono_copy(c: EdgeColoring, h: Graph, pattern: Optional[Pattern] = None) -> Optional[MonoCopy]:
    """A monochromatic copy of h (red searched first), or None."""
    pattern = pattern or compile_pattern(h)
    for color in (Color.RED, Color.BLUE):
        found = embed_in_rows(pattern, c.class_adj(color), c.host.n)
        if found is not None:
            return color, found
    return None


def is_mono_free(c: EdgeColoring, h: Graph) -> Tuple[bool, Optional[MonoCopy]]:
    """(True, None) when neither color class contains h; otherwise (False, (color, embedding))."""
    found = find_mono_copy(c, h)
    return found is None, found


def swap_colors(c: EdgeColoring) -> EdgeColoring:
    return c.swapped()


def color_pattern(c: EdgeColoring, v: int, s: Sequence[int]) -> ColorPattern:
    """Colors of the edges from v to each vertex of s, in the order of s."""
    colors = []
    for w in s:
        if not c.host.has_edge(v, w):
            raise ColoringError(f"color pattern undefined: ({v},{w}) is not an edge of the host")
        colors.append(c.color(v, w))
    return ColorPattern(observer=v, targets=tuple(s), colors=tuple(colors))


def neighborhood_mono_clique(c: EdgeColoring, v: int, color: Color, d: int) -> Optional[Tuple[int, ...]]:
    """A K_d of `color` inside v's `color`-neighbourhood, or None."""
    rows = c.class_adj(color)
    return find_clique(rows, c.host.n, d, within=rows[v])
