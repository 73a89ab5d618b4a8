"""Semi-strong coloring of t-intersecting hypergraphs."""

from .core import (
    UNBOUNDED,
    ColorHistogram,
    Coloring,
    Hypergraph,
    Verdict,
    distinct_colors_on_edge,
    histogram,
    intersection_level,
    is_c_strong,
    is_t_intersecting,
)
from .constructions import (
    BudgetExceeded,
    ImplicitCompleteUniform,
    complete_uniform_explicit,
    cone,
    gadget_c_minus_1,
    gadget_t_ge_c,
    random_sunflower,
    triangle,
)
from .colorers import Exhausted, greedy_weak, las_vegas_c_strong, random_coloring, star_three_color
from .exact import brute_force_chromatic, chromatic_complete_uniform, complete_uniform_valid, exact_chromatic
from .bounds import BoundsReport, bounds_report, lower_bound, smallest_ell, union_bound_holds

__version__ = "0.1.0"
