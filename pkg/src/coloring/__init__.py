from .extensions import extend_packing, extend_split, red_clique_packing
from .queries import color_pattern, find_mono_copy, is_mono_free, neighborhood_mono_clique, swap_colors

__all__ = [
    "extend_packing",
    "extend_split",
    "red_clique_packing",
    "color_pattern",
    "find_mono_copy",
    "is_mono_free",
    "neighborhood_mono_clique",
    "swap_colors",
]
